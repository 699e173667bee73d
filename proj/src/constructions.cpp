#include "selfavoid/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace selfavoid {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

// coefficient * 2^shift, refusing to wrap.
std::uint64_t scaled_power_of_two(std::uint64_t coefficient, std::uint64_t shift)
{
    if (shift >= 64 || coefficient > (kMax >> shift))
        throw std::overflow_error("value exceeds 64 bits");
    return coefficient << shift;
}

std::uint64_t twice_plus_one(std::uint64_t v)
{
    if (v > (kMax - 1) / 2)
        throw std::overflow_error("value exceeds 64 bits");
    return 2 * v + 1;
}

// Runs r_1 = first, r_2 = second, r_n = 2 r_{n-2} + 1.
class InterleavedDoubling {
public:
    InterleavedDoubling(std::uint64_t first, std::uint64_t second) : older_(first), newer_(second) {}

    std::uint64_t next()
    {
        std::uint64_t out = older_;
        older_ = newer_;
        newer_ = twice_plus_one(out);
        return out;
    }

private:
    std::uint64_t older_;
    std::uint64_t newer_;
};

std::vector<std::size_t> zero_positions(const Word& x)
{
    std::vector<std::size_t> out;
    auto s = x.symbols();
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p] == 0)
            out.push_back(p + 1);
    }
    return out;
}

std::string pair_text(const Violation& v)
{
    return "i=" + std::to_string(v.i) + " j=" + std::to_string(v.j);
}

} // namespace

std::string_view to_string(Construction id) noexcept
{
    switch (id) {
    case Construction::ternary_wsa: return "ternary";
    case Construction::binary_offset2: return "binary-offset2";
    }
    return "unknown";
}

std::optional<Construction> parse_construction(std::string_view name) noexcept
{
    if (name == "ternary")
        return Construction::ternary_wsa;
    if (name == "binary-offset2")
        return Construction::binary_offset2;
    return std::nullopt;
}

std::size_t claimed_min_index(Construction id) noexcept
{
    return id == Construction::ternary_wsa ? 1 : 2;
}

std::size_t two_zero_min_index(Construction id) noexcept
{
    return id == Construction::ternary_wsa ? 3 : 2;
}

std::uint64_t zero_position(std::uint64_t index)
{
    if (index == 0)
        throw std::invalid_argument("zero index must be at least 1");
    if (index % 2 == 1)
        return scaled_power_of_two(5, (index - 1) / 2) - 2;
    return scaled_power_of_two(7, index / 2 - 1) - 2;
}

std::uint64_t g_term(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("g index must be at least 1");
    InterleavedDoubling g(3, 2);
    std::uint64_t value = 0;
    for (std::uint64_t k = 0; k < n; ++k)
        value = g.next();
    return value;
}

Word generate(Construction id, std::size_t length)
{
    if (length == 0)
        throw std::invalid_argument("length must be at least 1");

    std::vector<Symbol> out;
    out.reserve(length + 1);
    auto ones = [&](std::uint64_t run) {
        const std::size_t room = length - std::min(length, out.size());
        out.insert(out.end(), static_cast<std::size_t>(std::min<std::uint64_t>(run, room)), 1);
    };

    if (id == Construction::ternary_wsa) {
        out = {2, 2};
        InterleavedDoubling runs(1, 2);
        while (out.size() < length) {
            out.push_back(0);
            ones(runs.next());
        }
        out.resize(length);
        return Word(std::move(out), 3);
    }

    out = {0, 0, 1, 0, 0};
    InterleavedDoubling runs(3, 2);
    while (out.size() < length) {
        ones(runs.next());
        out.push_back(0);
    }
    out.resize(length);
    return Word(std::move(out), 2);
}

std::optional<std::size_t> two_zero_window_check(const Word& x, std::size_t i_min)
{
    auto s = x.symbols();
    std::vector<std::size_t> zeros_before(s.size() + 1, 0);
    for (std::size_t p = 0; p < s.size(); ++p)
        zeros_before[p + 1] = zeros_before[p] + (s[p] == 0 ? 1 : 0);

    for (std::size_t i = std::max<std::size_t>(i_min, 1); 2 * i <= s.size(); ++i) {
        if (zeros_before[2 * i] - zeros_before[i - 1] != 2)
            return i;
    }
    return std::nullopt;
}

std::vector<std::size_t> block_lengths(const Word& x)
{
    std::vector<std::size_t> out;
    std::size_t run = 0;
    for (Symbol c : x.symbols()) {
        if (c == 1) {
            ++run;
        } else if (run > 0) {
            out.push_back(run);
            run = 0;
        }
    }
    if (run > 0)
        out.push_back(run);
    return out;
}

std::optional<Violation> parallel_first_violation(std::span<const Symbol> x,
                                                  const AvoidanceSpec& spec, unsigned workers)
{
    spec.validate();
    if (workers <= 1 || spec.min_index >= x.size() / 2)
        return first_violation(x, spec);

    const std::size_t first_j = spec.min_index + 1;
    const std::size_t last_j = x.size() / 2;
    std::atomic<std::size_t> best_j{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<Violation>> found(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t j = first_j + w; j <= last_j; j += workers) {
                    if (j > best_j.load(std::memory_order_relaxed))
                        return;
                    if (auto v = violation_at(x, j, spec)) {
                        found[w] = v;
                        std::size_t seen = best_j.load();
                        while (j < seen && !best_j.compare_exchange_weak(seen, j)) {
                        }
                        return;
                    }
                }
            });
        }
    }

    std::optional<Violation> best;
    for (const auto& v : found) {
        if (v && (!best || v->j < best->j))
            best = v;
    }
    return best;
}

std::optional<Violation> verify_weak_self_avoidance(Construction id, std::size_t length,
                                                    std::optional<std::size_t> min_index,
                                                    unsigned workers)
{
    const Word x = generate(id, length);
    const AvoidanceSpec spec{Relation::subword, min_index.value_or(claimed_min_index(id))};
    return parallel_first_violation(x.symbols(), spec, workers);
}

std::optional<Violation> middle_block_rigidity(const Word& x, std::size_t i_min)
{
    auto s = x.symbols();
    const auto zeros = zero_positions(x);
    std::vector<std::size_t> foreign_before(s.size() + 1, 0);
    for (std::size_t p = 0; p < s.size(); ++p)
        foreign_before[p + 1] = foreign_before[p] + (s[p] > 1 ? 1 : 0);

    struct Shape {
        std::size_t i, u, w;
    };
    struct Group {
        std::size_t min_u = std::numeric_limits<std::size_t>::max();
        std::vector<Shape> windows;
    };
    std::unordered_map<std::size_t, Group> by_middle;

    for (std::size_t j = std::max<std::size_t>(i_min, 1); 2 * j <= s.size(); ++j) {
        if (foreign_before[2 * j] != foreign_before[j - 1])
            throw std::invalid_argument("window " + std::to_string(j) + " holds a symbol other than 0 or 1");
        auto first = std::lower_bound(zeros.begin(), zeros.end(), j);
        if (zeros.end() - first < 2 || first[1] > 2 * j ||
            (first + 2 != zeros.end() && first[2] <= 2 * j))
            throw std::invalid_argument("window " + std::to_string(j) + " does not have exactly two zeros");

        const std::size_t p1 = first[0];
        const std::size_t p2 = first[1];
        const Shape shape{j, p1 - j, 2 * j - p2};
        Group& group = by_middle[p2 - p1 - 1];

        if (group.min_u <= shape.u) {
            for (const Shape& earlier : group.windows) {
                if (earlier.u <= shape.u && earlier.w <= shape.w)
                    return Violation{earlier.i, j};
            }
        }
        group.min_u = std::min(group.min_u, shape.u);
        group.windows.push_back(shape);
    }
    return std::nullopt;
}

bool StructuralReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

StructuralReport verify_structural(Construction id, std::size_t length)
{
    const Word x = generate(id, length);
    const auto s = x.symbols();
    StructuralReport report{id, length, {}};
    const bool ternary = id == Construction::ternary_wsa;

    // Windows below the two-zero range.
    {
        CheckResult c{"prefix", true, {}};
        if (ternary) {
            const std::size_t head = std::min<std::size_t>(2, s.size());
            const bool head_ok = std::all_of(s.begin(), s.begin() + head, [](Symbol v) { return v == 2; });
            const auto stray = std::find(s.begin() + head, s.end(), Symbol{2});
            c.passed = head_ok && stray == s.end();
            if (c.passed && s.size() >= 4)
                c.passed = !is_subword(window_view(s, 1), window_view(s, 2));
            c.detail = c.passed ? "symbol 2 only at positions 1-2"
                                : "symbol 2 misplaced or x[1..2] inside x[2..4]";
        } else {
            static constexpr Symbol expected[] = {0, 0, 1, 0, 0};
            const std::size_t head = std::min<std::size_t>(5, s.size());
            c.passed = std::equal(s.begin(), s.begin() + head, expected);
            c.detail = c.passed ? "starts 00100" : "does not start 00100";
        }
        report.checks.push_back(std::move(c));
    }

    // The generator runs on a run-length schedule; compare against the
    // closed forms.
    {
        CheckResult c{"zero_schedule", true, {}};
        const auto zeros = zero_positions(x);
        if (ternary) {
            std::size_t k = 0;
            for (; k < zeros.size(); ++k) {
                if (zeros[k] != zero_position(k + 1)) {
                    c.passed = false;
                    c.detail = "zero " + std::to_string(k + 1) + " at " + std::to_string(zeros[k]) +
                               ", expected " + std::to_string(zero_position(k + 1));
                    break;
                }
            }
            if (c.passed && zero_position(k + 1) <= s.size()) {
                c.passed = false;
                c.detail = "missing zero at " + std::to_string(zero_position(k + 1));
            }
            if (c.passed)
                c.detail = std::to_string(zeros.size()) + " zeros match f_1..f_" + std::to_string(zeros.size());
        } else {
            auto runs = block_lengths(x);
            const bool clipped = !s.empty() && s.back() == 1;
            const std::size_t complete = runs.size() - (clipped ? 1 : 0);
            for (std::size_t k = 1; k < runs.size() && c.passed; ++k) {
                const auto g = g_term(k);
                if (k < complete ? runs[k] != g : runs[k] > g) {
                    c.passed = false;
                    c.detail = "run " + std::to_string(k) + " has length " + std::to_string(runs[k]) +
                               ", expected g_" + std::to_string(k) + " = " + std::to_string(g);
                }
            }
            if (c.passed && s.size() > 5 &&
                std::adjacent_find(s.begin() + 4, s.end(), [](Symbol a, Symbol b) { return a == 0 && b == 0; }) != s.end()) {
                c.passed = false;
                c.detail = "adjacent zeros after position 5";
            }
            if (c.passed)
                c.detail = std::to_string(runs.empty() ? 0 : runs.size() - 1) + " runs match g_1..";
        }
        report.checks.push_back(std::move(c));
    }

    const std::size_t from = two_zero_min_index(id);
    {
        CheckResult c{"two_zero_windows", true, {}};
        if (auto bad = two_zero_window_check(x, from)) {
            c.passed = false;
            c.detail = "window " + std::to_string(*bad) + " does not hold exactly two zeros";
        } else {
            c.detail = "windows " + std::to_string(from) + ".." + std::to_string(s.size() / 2);
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"distinct_blocks", true, {}};
        auto runs = block_lengths(x);
        if (!s.empty() && s.back() == 1 && !runs.empty())
            runs.pop_back();
        std::unordered_set<std::size_t> seen;
        for (auto r : runs) {
            if (!seen.insert(r).second) {
                c.passed = false;
                c.detail = "block length " + std::to_string(r) + " repeats";
                break;
            }
        }
        if (c.passed)
            c.detail = std::to_string(runs.size()) + " complete blocks";
        report.checks.push_back(std::move(c));
    }

    if (ternary) {
        CheckResult c{"interval_cases", true, {}};
        const auto zeros = zero_positions(x);
        std::size_t windows = 0;
        auto check_range = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t z1, std::uint64_t z2) {
            for (std::uint64_t i = lo; i < hi && 2 * i <= s.size() && c.passed; ++i) {
                auto first = std::lower_bound(zeros.begin(), zeros.end(), i);
                auto last = std::upper_bound(zeros.begin(), zeros.end(), 2 * i);
                ++windows;
                if (last - first != 2 || first[0] != z1 || first[1] != z2) {
                    c.passed = false;
                    c.detail = "window " + std::to_string(i) + " zeros differ from " +
                               std::to_string(z1) + ", " + std::to_string(z2);
                }
            }
        };
        for (std::uint64_t n = 0; n <= 6; ++n) {
            const std::uint64_t p = std::uint64_t{1} << n;
            check_range(5 * p - 1, 7 * p - 1, 7 * p - 2, 10 * p - 2);
            if (n >= 1)
                check_range(7 * p / 2 - 1, 5 * p - 1, 5 * p - 2, 7 * p - 2);
        }
        if (c.passed)
            c.detail = std::to_string(windows) + " windows, n <= 6";
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"middle_block_rigidity", true, {}};
        try {
            if (auto v = middle_block_rigidity(x, from)) {
                c.passed = false;
                c.detail = "window " + pair_text(*v);
            } else {
                c.detail = "all pairs " + std::to_string(from) + " <= i < j <= " + std::to_string(s.size() / 2);
            }
        } catch (const std::invalid_argument& e) {
            c.passed = false;
            c.detail = e.what();
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

} // namespace selfavoid
