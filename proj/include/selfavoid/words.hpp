#pragma once

// Words over a small integer alphabet, the subword / subsequence orders, and
// the window self-avoidance predicate. Positions are 1-based at every public
// boundary: window(x, i) is x[i..2i].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selfavoid {

using Symbol = std::uint8_t;

/// Largest alphabet the textual encoding can express ('0'..'9').
inline constexpr unsigned kMaxDigitAlphabet = 10;

/// Immutable finite word over {0, ..., alphabet_size - 1}.
class Word {
public:
    Word() = default;

    /// Throws std::invalid_argument if alphabet_size is 0 or any symbol is
    /// outside the alphabet.
    Word(std::vector<Symbol> symbols, unsigned alphabet_size);

    /// Parses a digit string. An alphabet size of 0 infers 1 + max digit
    /// (1 for the empty word).
    static Word from_digits(std::string_view digits, unsigned alphabet_size = 0);

    std::string to_digits() const;

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    unsigned alphabet_size() const noexcept { return alphabet_size_; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// 1-based access; throws std::out_of_range.
    Symbol at(std::size_t position) const;

    friend bool operator==(const Word&, const Word&) = default;

    /// Length first, then lexicographic by symbol. Breadth-first order.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Symbol> symbols_;
    unsigned alphabet_size_ = 1;
};

enum class Relation { subword, subsequence };

std::string_view to_string(Relation relation) noexcept;
std::optional<Relation> parse_relation(std::string_view name) noexcept;

/// Which containment order is forbidden between windows, and from which
/// window index on the constraint applies.
struct AvoidanceSpec {
    Relation relation = Relation::subword;
    std::size_t min_index = 1;

    /// Throws std::invalid_argument when min_index is 0.
    void validate() const;

    friend bool operator==(const AvoidanceSpec&, const AvoidanceSpec&) = default;
};

/// Witness that window i embeds in window j, with i < j.
struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Containment on raw symbol spans. These are the hot-loop entry points.
bool is_subword(std::span<const Symbol> needle, std::span<const Symbol> haystack);
bool is_subsequence(std::span<const Symbol> needle, std::span<const Symbol> haystack);
bool contains(Relation relation, std::span<const Symbol> needle,
              std::span<const Symbol> haystack);

inline bool is_subword(const Word& y, const Word& z) { return is_subword(y.symbols(), z.symbols()); }
inline bool is_subsequence(const Word& y, const Word& z) { return is_subsequence(y.symbols(), z.symbols()); }

/// x[i..2i] as a view into x. Throws std::out_of_range unless 1 <= i and 2i <= |x|.
std::span<const Symbol> window_view(std::span<const Symbol> x, std::size_t i);
Word window(const Word& x, std::size_t i);

/// Smallest violating pair ordered by j, then i, with
/// spec.min_index <= i < j and 2j <= |x|.
std::optional<Violation> first_violation(std::span<const Symbol> x, const AvoidanceSpec& spec);
std::optional<Violation> first_violation(const Word& x, const AvoidanceSpec& spec);

/// Checks only pairs whose later window is x[j..2j] for the given j. Used by
/// the search, where extending a word by one symbol can only add that j.
std::optional<Violation> violation_at(std::span<const Symbol> x, std::size_t j,
                                      const AvoidanceSpec& spec);

bool is_self_avoiding(const Word& x, const AvoidanceSpec& spec);

} // namespace selfavoid
