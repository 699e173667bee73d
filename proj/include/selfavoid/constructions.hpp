#pragma once

// The two explicit infinite words and checks of the structure that makes
// them self-avoiding.
//
//   ternary        2 2 0 1 0 1^2 0 1^3 0 1^5 0 1^7 0 1^11 ...
//                  zeros exactly at f_1, f_2, ... = 3, 5, 8, 12, 18, ...
//                  weakly self-avoiding for all 1 <= i < j
//   binary-offset2 0 0 1 0 0 1^3 0 1^2 0 1^7 0 1^5 0 ...
//                  1-runs g_1, g_2, ... = 3, 2, 7, 5, 15, ...
//                  weakly self-avoiding for all 2 <= i < j

#include "selfavoid/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfavoid {

enum class Construction { ternary_wsa, binary_offset2 };

std::string_view to_string(Construction id) noexcept;
/// Accepts "ternary" and "binary-offset2".
std::optional<Construction> parse_construction(std::string_view name) noexcept;

/// Smallest window index for which the construction is claimed to avoid
/// itself: 1 for ternary, 2 for binary-offset2.
std::size_t claimed_min_index(Construction id) noexcept;

/// Smallest window index from which every window has exactly two zeros:
/// 3 for ternary, 2 for binary-offset2.
std::size_t two_zero_min_index(Construction id) noexcept;

/// f_index, the 1-based position of the index-th zero of the ternary word:
/// f_{2n+1} = 5*2^n - 2, f_{2n} = 7*2^(n-1) - 2.
/// Throws std::invalid_argument for index 0, std::overflow_error past 64 bits.
std::uint64_t zero_position(std::uint64_t index);

/// g_1 = 3, g_2 = 2, g_n = 2 g_{n-2} + 1.
/// Throws std::invalid_argument for n 0, std::overflow_error past 64 bits.
std::uint64_t g_term(std::uint64_t n);

/// Exact prefix of the chosen word. Built from its run-length schedule, not
/// from zero_position.
Word generate(Construction id, std::size_t length);

/// Smallest i >= i_min with 2i <= |x| whose window does not hold exactly two
/// zeros.
std::optional<std::size_t> two_zero_window_check(const Word& x, std::size_t i_min);

/// Lengths of the maximal runs of symbol 1, in order.
std::vector<std::size_t> block_lengths(const Word& x);

/// Exhaustive pairwise first_violation on generate(id, length) under the
/// subword relation. min_index defaults to claimed_min_index(id). With
/// workers > 1 the j range is split across threads; the result is the same.
std::optional<Violation> verify_weak_self_avoidance(Construction id, std::size_t length,
                                                    std::optional<std::size_t> min_index = {},
                                                    unsigned workers = 1);

/// Same scan as first_violation for the subword relation, split across
/// threads by j. Returns the same pair as the sequential scan.
std::optional<Violation> parallel_first_violation(std::span<const Symbol> x,
                                                  const AvoidanceSpec& spec, unsigned workers);

/// Decides, for a word whose windows i >= i_min each read 1^u 0 1^v 0 1^w,
/// whether any earlier window is a subword of a later one. Such a window
/// embeds in 1^u' 0 1^v' 0 1^w' iff v = v', u <= u' and w <= w', so only
/// windows sharing a middle block need comparing. Returns the smallest
/// violating pair by (j, i). Throws std::invalid_argument if some window in
/// range does not have exactly two zeros or holds a symbol other than 0 or 1.
std::optional<Violation> middle_block_rigidity(const Word& x, std::size_t i_min);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct StructuralReport {
    Construction construction = Construction::ternary_wsa;
    std::size_t length = 0;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
};

/// Scale-friendly verification: prefix symbols, zero schedule against the
/// closed forms, two zeros per window, distinct 1-blocks, the interval case
/// analysis (ternary, n <= 6) and middle-block rigidity over all pairs.
StructuralReport verify_structural(Construction id, std::size_t length);

} // namespace selfavoid
