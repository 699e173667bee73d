#include "selfavoid/search.hpp"

#include <stdexcept>
#include <string>

namespace selfavoid {

namespace {

// Nodes of one tree level, all of the same length, packed back to back.
// Processing levels in order and emitting children in symbol order is the
// same sequence a FIFO queue would produce.
struct Level {
    std::size_t length = 0;
    std::size_t count = 0;
    std::vector<Symbol> symbols;

    std::span<const Symbol> node(std::size_t k) const
    {
        return std::span<const Symbol>(symbols).subspan(k * length, length);
    }
    void push(std::span<const Symbol> word)
    {
        symbols.insert(symbols.end(), word.begin(), word.end());
        ++count;
    }
};

Word root_word(const SearchConfig& config)
{
    if (!config.root)
        return Word({}, config.alphabet_size);
    auto s = config.root->symbols();
    return Word({s.begin(), s.end()}, config.alphabet_size);
}

} // namespace

TreeSummary enumerate_tree(const SearchConfig& config)
{
    if (config.alphabet_size == 0)
        throw std::invalid_argument("alphabet size must be positive");
    if (config.alphabet_size > 256)
        throw std::invalid_argument("alphabet size must be at most 256");
    config.spec.validate();
    if (config.depth_limit && *config.depth_limit == 0)
        throw std::invalid_argument("depth limit must be positive");

    const Word root = root_word(config);
    if (auto v = first_violation(root, config.spec))
        throw std::invalid_argument("root " + root.to_digits() +
                                    " is not self-avoiding (i=" + std::to_string(v->i) +
                                    ", j=" + std::to_string(v->j) + ")");

    TreeSummary out;
    Level deepest_survivors;
    Level current{root.size(), 1, {root.symbols().begin(), root.symbols().end()}};

    while (current.count > 0 && !out.budget_exhausted) {
        const std::size_t length = current.length;
        const bool at_limit = config.depth_limit && length >= *config.depth_limit;
        const bool may_add_pair = length % 2 == 0 && length / 2 > config.spec.min_index;

        Level next{length + 1, 0, {}};
        Level survivors{length, 0, {}};
        if (!at_limit)
            next.symbols.reserve(current.symbols.size() * config.alphabet_size + current.count);

        for (std::size_t k = 0; k < current.count; ++k) {
            if (out.nodes_visited == config.node_budget) {
                out.budget_exhausted = true;
                out.truncated = true;
                break;
            }
            ++out.nodes_visited;
            const auto word = current.node(k);

            bool violated = false;
            if (config.full_recheck)
                violated = first_violation(word, config.spec).has_value();
            else if (may_add_pair)
                violated = violation_at(word, length / 2, config.spec).has_value();

            if (violated) {
                out.leaves.emplace_back(std::vector<Symbol>(word.begin(), word.end()),
                                        config.alphabet_size);
                out.max_leaf_length = length;
                continue;
            }

            survivors.push(word);
            if (at_limit) {
                out.truncated = true;
                continue;
            }
            for (unsigned c = 0; c < config.alphabet_size; ++c) {
                next.push(word);
                next.symbols.push_back(static_cast<Symbol>(c));
            }
        }

        if (survivors.count > 0)
            deepest_survivors = std::move(survivors);
        current = std::move(next);
    }

    out.max_self_avoiding_length = deepest_survivors.length;
    for (std::size_t k = 0; k < deepest_survivors.count; ++k) {
        auto w = deepest_survivors.node(k);
        out.longest_self_avoiding.emplace_back(std::vector<Symbol>(w.begin(), w.end()),
                                               config.alphabet_size);
    }
    return out;
}

LongestWords longest_words(const SearchConfig& config)
{
    TreeSummary tree = enumerate_tree(config);
    return {tree.max_self_avoiding_length, std::move(tree.longest_self_avoiding), tree.truncated,
            tree.budget_exhausted};
}

} // namespace selfavoid
