#include "selfavoid/search.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace selfavoid;

namespace {

SearchConfig config(unsigned k, Relation relation, std::size_t min_index = 1,
                    std::optional<std::string> root = std::nullopt)
{
    SearchConfig c;
    c.alphabet_size = k;
    c.spec = {relation, min_index};
    if (root)
        c.root = Word::from_digits(*root, k);
    return c;
}

std::vector<std::string> digits(const std::vector<Word>& words)
{
    std::vector<std::string> out;
    for (const auto& w : words)
        out.push_back(w.to_digits());
    return out;
}

std::string complement(std::string w)
{
    for (char& c : w)
        c = c == '0' ? '1' : '0';
    return w;
}

} // namespace

TEST(EnumerateTreeTest, ReproducesRootedTreeLeaves)
{
    const auto golden = oracle::read_lines(SELFAVOID_TEST_DATA "/rooted_tree_leaves.txt");
    ASSERT_EQ(golden.size(), 92u);

    const TreeSummary tree = enumerate_tree(config(2, Relation::subword, 1, "0"));
    EXPECT_EQ(tree.leaf_count(), 92u);
    EXPECT_EQ(tree.max_leaf_length, 14u);
    EXPECT_EQ(tree.max_self_avoiding_length, 13u);
    EXPECT_FALSE(tree.truncated);
    EXPECT_FALSE(tree.budget_exhausted);
    EXPECT_EQ(digits(tree.leaves), golden);
}

TEST(EnumerateTreeTest, UnaryAlphabetHasOneLeaf)
{
    const TreeSummary tree = enumerate_tree(config(1, Relation::subword, 1, "0"));
    EXPECT_EQ(digits(tree.leaves), std::vector<std::string>{"0000"});
    EXPECT_EQ(tree.max_self_avoiding_length, 3u);
    EXPECT_EQ(tree.nodes_visited, 4u);
}

TEST(EnumerateTreeTest, FriedmanBinaryMaximumIsEleven)
{
    const TreeSummary tree = enumerate_tree(config(2, Relation::subsequence, 1, "0"));
    EXPECT_FALSE(tree.truncated);
    EXPECT_EQ(tree.max_self_avoiding_length, 11u);
    EXPECT_EQ(tree.max_leaf_length, 12u);
}

TEST(EnumerateTreeTest, OffsetTwoVariantIsTruncatedByDepthLimit)
{
    SearchConfig c = config(2, Relation::subword, 2);
    c.depth_limit = 20;
    const TreeSummary tree = enumerate_tree(c);
    EXPECT_TRUE(tree.truncated);
    EXPECT_FALSE(tree.budget_exhausted);
    EXPECT_EQ(tree.max_self_avoiding_length, 20u);
    EXPECT_FALSE(tree.longest_self_avoiding.empty());
}

// The depth-64 run cannot finish: the tree grows by about 1.5x per level, so
// the default node budget stops it first. It must still come back truncated.
TEST(EnumerateTreeTest, OffsetTwoVariantAtDepthSixtyFourIsTruncated)
{
    SearchConfig c = config(2, Relation::subword, 2);
    c.depth_limit = 64;
    const TreeSummary tree = enumerate_tree(c);
    EXPECT_TRUE(tree.truncated);
    EXPECT_TRUE(tree.budget_exhausted);
    EXPECT_EQ(tree.nodes_visited, kDefaultNodeBudget);
}

TEST(EnumerateTreeTest, NodeBudgetYieldsBreadthFirstPrefix)
{
    const TreeSummary full = enumerate_tree(config(2, Relation::subword, 1));
    SearchConfig c = config(2, Relation::subword, 1);
    c.node_budget = 100;
    const TreeSummary partial = enumerate_tree(c);
    EXPECT_TRUE(partial.truncated);
    EXPECT_TRUE(partial.budget_exhausted);
    EXPECT_EQ(partial.nodes_visited, 100u);
    ASSERT_LT(partial.leaf_count(), full.leaf_count());
    EXPECT_TRUE(std::equal(partial.leaves.begin(), partial.leaves.end(), full.leaves.begin()));
}

TEST(EnumerateTreeTest, RejectsInvalidConfigs)
{
    EXPECT_THROW(enumerate_tree(config(2, Relation::subword, 1, "0000")), std::invalid_argument);
    EXPECT_THROW(enumerate_tree(config(0, Relation::subword)), std::invalid_argument);
    EXPECT_THROW(enumerate_tree(config(2, Relation::subword, 0)), std::invalid_argument);
    SearchConfig c = config(2, Relation::subword);
    c.root = Word::from_digits("012");
    EXPECT_THROW(enumerate_tree(c), std::invalid_argument);
    c = config(2, Relation::subword);
    c.depth_limit = 0;
    EXPECT_THROW(enumerate_tree(c), std::invalid_argument);
}

TEST(EnumerateTreeTest, LeavesAreMinimalViolators)
{
    for (Relation relation : {Relation::subword, Relation::subsequence}) {
        const AvoidanceSpec spec{relation, 1};
        const TreeSummary tree = enumerate_tree(config(2, relation));
        for (const Word& leaf : tree.leaves) {
            EXPECT_FALSE(is_self_avoiding(leaf, spec)) << leaf.to_digits();
            for (std::size_t n = 0; n < leaf.size(); ++n) {
                auto s = leaf.symbols().first(n);
                EXPECT_TRUE(is_self_avoiding(Word({s.begin(), s.end()}, 2), spec)) << leaf.to_digits();
            }
        }
    }
}

TEST(EnumerateTreeTest, LeavesComeInLengthThenLexOrder)
{
    for (unsigned k : {1u, 2u, 3u}) {
        SearchConfig c = config(k, Relation::subword);
        c.depth_limit = 9;
        const TreeSummary tree = enumerate_tree(c);
        EXPECT_TRUE(std::is_sorted(tree.leaves.begin(), tree.leaves.end()));
        EXPECT_TRUE(std::adjacent_find(tree.leaves.begin(), tree.leaves.end()) == tree.leaves.end());
    }
}

TEST(EnumerateTreeTest, FullTreeIsClosedUnderComplement)
{
    const TreeSummary full = enumerate_tree(config(2, Relation::subword));
    EXPECT_EQ(full.leaf_count(), 184u);
    EXPECT_EQ(full.max_leaf_length, 14u);

    const auto leaves = digits(full.leaves);
    const std::set<std::string> all(leaves.begin(), leaves.end());
    for (const auto& leaf : leaves)
        EXPECT_TRUE(all.count(complement(leaf))) << leaf;

    // Rooting at "0" keeps exactly one of each complementary pair.
    const auto rooted = digits(enumerate_tree(config(2, Relation::subword, 1, "0")).leaves);
    std::set<std::string> transversal;
    for (const auto& leaf : rooted) {
        EXPECT_TRUE(all.count(leaf));
        EXPECT_FALSE(std::count(rooted.begin(), rooted.end(), complement(leaf)));
        transversal.insert(leaf);
        transversal.insert(complement(leaf));
    }
    EXPECT_EQ(transversal, all);
}

// Self-avoiding words of length n are exactly the length-n proper prefixes of
// leaves. Counts per length come from testing all 2^n words.
TEST(EnumerateTreeTest, AgreesWithBruteForceUpToTwelve)
{
    const TreeSummary tree = enumerate_tree(config(2, Relation::subword));
    std::map<std::size_t, std::set<std::string>> from_tree;
    for (const auto& leaf : digits(tree.leaves))
        for (std::size_t n = 0; n < leaf.size(); ++n)
            from_tree[n].insert(leaf.substr(0, n));

    const std::size_t expected_counts[] = {1, 2, 4, 8, 10, 20, 14, 28, 16, 32, 12, 24, 4};
    for (std::size_t n = 0; n <= 12; ++n) {
        std::set<std::string> brute;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const std::string w = oracle::binary_word(bits, n);
            if (!oracle::first_violation(w, false))
                brute.insert(w);
        }
        EXPECT_EQ(brute.size(), expected_counts[n]) << "n=" << n;
        EXPECT_EQ(from_tree[n], brute) << "n=" << n;
    }
}

TEST(EnumerateTreeTest, IncrementalCheckMatchesFullRecheck)
{
    for (Relation relation : {Relation::subword, Relation::subsequence}) {
        for (std::size_t m : {1u, 2u, 3u}) {
            SearchConfig fast = config(2, relation, m);
            fast.depth_limit = 16;
            SearchConfig slow = fast;
            slow.full_recheck = true;
            EXPECT_EQ(enumerate_tree(fast), enumerate_tree(slow));
        }
    }
    SearchConfig fast = config(3, Relation::subword);
    fast.depth_limit = 10;
    SearchConfig slow = fast;
    slow.full_recheck = true;
    EXPECT_EQ(enumerate_tree(fast), enumerate_tree(slow));
}

TEST(EnumerateTreeTest, IsDeterministic)
{
    SearchConfig c = config(3, Relation::subword);
    c.depth_limit = 12;
    EXPECT_EQ(enumerate_tree(c), enumerate_tree(c));
}

TEST(LongestWordsTest, BinarySubwordMaximaAreTheEightWords)
{
    const LongestWords result = longest_words(config(2, Relation::subword));
    EXPECT_FALSE(result.truncated);
    EXPECT_EQ(result.length, 13u);
    const std::vector<std::string> listed = {"0010111111010", "0010111111011", "0011110101010",
                                            "0011110101011"};
    std::set<std::string> expected(listed.begin(), listed.end());
    for (const auto& w : listed)
        expected.insert(complement(w));
    const auto got = digits(result.words);
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected);
    EXPECT_EQ(got.size(), 8u);
}

TEST(LongestWordsTest, UnaryMaximumIsThreeZeros)
{
    const LongestWords result = longest_words(config(1, Relation::subword));
    EXPECT_EQ(result.length, 3u);
    EXPECT_EQ(digits(result.words), std::vector<std::string>{"000"});
}

TEST(LongestWordsTest, FriedmanBaselines)
{
    EXPECT_EQ(longest_words(config(1, Relation::subsequence)).length, 3u);
    const LongestWords binary = longest_words(config(2, Relation::subsequence));
    EXPECT_FALSE(binary.truncated);
    EXPECT_EQ(binary.length, 11u);
    EXPECT_EQ(digits(binary.words), oracle::read_lines(SELFAVOID_TEST_DATA "/subsequence_k2_longest.txt"));
}

TEST(LongestWordsTest, TruncationReportsLowerBound)
{
    SearchConfig c = config(2, Relation::subword, 2);
    c.depth_limit = 12;
    const LongestWords result = longest_words(c);
    EXPECT_TRUE(result.truncated);
    EXPECT_EQ(result.length, 12u);
}
