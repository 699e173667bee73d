#pragma once

// Breadth-first enumeration of the tree of self-avoiding words. A node's
// children are its one-symbol extensions; a node that is not self-avoiding is
// a leaf (a minimal violator). When the tree is finite the leaves prove that
// a longest self-avoiding word exists.

#include "selfavoid/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace selfavoid {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchConfig {
    unsigned alphabet_size = 2;
    AvoidanceSpec spec;
    /// Self-avoiding nodes of this length are not expanded; nullopt searches
    /// until the frontier empties.
    std::optional<std::size_t> depth_limit;
    /// Fixed starting prefix. Must be self-avoiding. Absent means ε.
    std::optional<Word> root;
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Re-run the full violation scan on every node instead of checking only
    /// the newest window.
    bool full_recheck = false;
};

struct TreeSummary {
    /// Minimal violators, breadth-first (length, then lexicographic).
    std::vector<Word> leaves;
    std::size_t max_leaf_length = 0;
    std::size_t max_self_avoiding_length = 0;
    /// Every self-avoiding node of length max_self_avoiding_length.
    std::vector<Word> longest_self_avoiding;
    /// The frontier was not exhausted: a self-avoiding node hit depth_limit
    /// or the node budget ran out. Never a completed proof.
    bool truncated = false;
    /// The search stopped after node_budget nodes; leaves are a prefix of the
    /// full breadth-first list.
    bool budget_exhausted = false;
    std::uint64_t nodes_visited = 0;

    std::size_t leaf_count() const noexcept { return leaves.size(); }

    friend bool operator==(const TreeSummary&, const TreeSummary&) = default;
};

struct LongestWords {
    /// Exact when truncated is false, otherwise a lower bound.
    std::size_t length = 0;
    std::vector<Word> words;
    bool truncated = false;
    bool budget_exhausted = false;
};

/// Throws std::invalid_argument for an inconsistent config.
TreeSummary enumerate_tree(const SearchConfig& config);

LongestWords longest_words(const SearchConfig& config);

} // namespace selfavoid
