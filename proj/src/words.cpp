#include "selfavoid/words.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace selfavoid {

Word::Word(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size)
{
    if (alphabet_size_ == 0)
        throw std::invalid_argument("alphabet size must be positive");
    for (std::size_t p = 0; p < symbols_.size(); ++p) {
        if (symbols_[p] >= alphabet_size_)
            throw std::invalid_argument("symbol " + std::to_string(symbols_[p]) +
                                        " at position " + std::to_string(p + 1) +
                                        " is outside alphabet of size " +
                                        std::to_string(alphabet_size_));
    }
}

Word Word::from_digits(std::string_view digits, unsigned alphabet_size)
{
    std::vector<Symbol> symbols;
    symbols.reserve(digits.size());
    unsigned inferred = 1;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("not a digit: '") + c + "'");
        auto s = static_cast<Symbol>(c - '0');
        inferred = std::max(inferred, static_cast<unsigned>(s) + 1);
        symbols.push_back(s);
    }
    return Word(std::move(symbols), alphabet_size == 0 ? inferred : alphabet_size);
}

std::string Word::to_digits() const
{
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) {
        if (s >= kMaxDigitAlphabet)
            throw std::out_of_range("symbol " + std::to_string(s) + " has no digit encoding");
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

Symbol Word::at(std::size_t position) const
{
    if (position == 0 || position > symbols_.size())
        throw std::out_of_range("position " + std::to_string(position) +
                                " outside word of length " + std::to_string(symbols_.size()));
    return symbols_[position - 1];
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    if (auto c = std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                        b.symbols_.begin(), b.symbols_.end());
        c != 0)
        return c;
    return a.alphabet_size_ <=> b.alphabet_size_;
}

std::string_view to_string(Relation relation) noexcept
{
    switch (relation) {
    case Relation::subword: return "subword";
    case Relation::subsequence: return "subsequence";
    }
    return "unknown";
}

std::optional<Relation> parse_relation(std::string_view name) noexcept
{
    if (name == "subword")
        return Relation::subword;
    if (name == "subsequence")
        return Relation::subsequence;
    return std::nullopt;
}

void AvoidanceSpec::validate() const
{
    if (min_index == 0)
        throw std::invalid_argument("min_index must be at least 1");
}

// Knuth-Morris-Pratt. Windows are short, so the failure table lives in a
// reusable per-thread buffer.
bool is_subword(std::span<const Symbol> needle, std::span<const Symbol> haystack)
{
    const std::size_t m = needle.size();
    if (m == 0)
        return true;
    if (m > haystack.size())
        return false;

    thread_local std::vector<std::size_t> failure;
    failure.assign(m, 0);
    for (std::size_t q = 1, k = 0; q < m; ++q) {
        while (k > 0 && needle[q] != needle[k])
            k = failure[k - 1];
        if (needle[q] == needle[k])
            ++k;
        failure[q] = k;
    }

    std::size_t matched = 0;
    for (Symbol c : haystack) {
        while (matched > 0 && c != needle[matched])
            matched = failure[matched - 1];
        if (c == needle[matched] && ++matched == m)
            return true;
    }
    return false;
}

bool is_subsequence(std::span<const Symbol> needle, std::span<const Symbol> haystack)
{
    if (needle.size() > haystack.size())
        return false;
    std::size_t matched = 0;
    for (std::size_t p = 0; p < haystack.size() && matched < needle.size(); ++p) {
        if (haystack[p] == needle[matched])
            ++matched;
    }
    return matched == needle.size();
}

bool contains(Relation relation, std::span<const Symbol> needle, std::span<const Symbol> haystack)
{
    return relation == Relation::subword ? is_subword(needle, haystack)
                                         : is_subsequence(needle, haystack);
}

std::span<const Symbol> window_view(std::span<const Symbol> x, std::size_t i)
{
    if (i == 0 || i > x.size() / 2)
        throw std::out_of_range("window index " + std::to_string(i) +
                                " invalid for word of length " + std::to_string(x.size()));
    return x.subspan(i - 1, i + 1);
}

Word window(const Word& x, std::size_t i)
{
    auto view = window_view(x.symbols(), i);
    return Word({view.begin(), view.end()}, x.alphabet_size());
}

namespace {

// Subword test against one fixed haystack of at most 64 symbols. occurs_[c]
// has bit p set when haystack[p] == c, so the needle starts at p iff bit p
// survives AND-ing occurs_[needle[t]] >> t over all t.
class ShortHaystack {
public:
    static constexpr std::size_t kMaxLength = 64;

    explicit ShortHaystack(std::span<const Symbol> haystack) : length_(haystack.size())
    {
        occurs_.fill(0);
        for (std::size_t p = 0; p < haystack.size(); ++p)
            occurs_[haystack[p]] |= std::uint64_t{1} << p;
    }

    bool contains(std::span<const Symbol> needle) const
    {
        const std::size_t m = needle.size();
        if (m == 0)
            return true;
        if (m > length_)
            return false;
        const std::size_t starts = length_ - m + 1;
        std::uint64_t alive = starts == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << starts) - 1;
        for (std::size_t t = 0; t < m && alive != 0; ++t)
            alive &= occurs_[needle[t]] >> t;
        return alive != 0;
    }

private:
    std::array<std::uint64_t, 256> occurs_;
    std::size_t length_;
};

} // namespace

std::optional<Violation> violation_at(std::span<const Symbol> x, std::size_t j,
                                      const AvoidanceSpec& spec)
{
    const auto later = window_view(x, j);
    if (spec.relation == Relation::subword && later.size() <= ShortHaystack::kMaxLength) {
        const ShortHaystack haystack(later);
        for (std::size_t i = spec.min_index; i < j; ++i) {
            if (haystack.contains(x.subspan(i - 1, i + 1)))
                return Violation{i, j};
        }
        return std::nullopt;
    }
    for (std::size_t i = spec.min_index; i < j; ++i) {
        if (contains(spec.relation, x.subspan(i - 1, i + 1), later))
            return Violation{i, j};
    }
    return std::nullopt;
}

std::optional<Violation> first_violation(std::span<const Symbol> x, const AvoidanceSpec& spec)
{
    spec.validate();
    if (spec.min_index >= x.size() / 2)
        return std::nullopt;
    for (std::size_t j = spec.min_index + 1; 2 * j <= x.size(); ++j) {
        if (auto v = violation_at(x, j, spec))
            return v;
    }
    return std::nullopt;
}

std::optional<Violation> first_violation(const Word& x, const AvoidanceSpec& spec)
{
    return first_violation(x.symbols(), spec);
}

bool is_self_avoiding(const Word& x, const AvoidanceSpec& spec)
{
    return !first_violation(x, spec).has_value();
}

} // namespace selfavoid
