#include "oracles.hpp"
#include "run_cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST(CliCheckTest, Examples)
{
    auto r = run_cli("check 000 --relation subword");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "self-avoiding\n");

    r = run_cli("check 0000 --relation subword");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "violation i=1 j=2 window_i=00 window_j=000\n");

    r = run_cli("check ''");
    EXPECT_EQ(r.status, 0);

    r = run_cli("check 0101 --relation subsequence --min-index 1");
    EXPECT_EQ(r.status, 1);
}

TEST(CliCheckTest, ReadsStdin)
{
    auto r = run_cli("check -", "printf '0010111111010\\n' |");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "self-avoiding\n");
}

TEST(CliCheckTest, MalformedInputIsUsageError)
{
    EXPECT_EQ(run_cli("check 01x").status, 2);
    EXPECT_EQ(run_cli("check 012 -k 2").status, 2);
    EXPECT_EQ(run_cli("check 01 --min-index 0").status, 2);
    EXPECT_EQ(run_cli("check 01 --relation factor").status, 2);
    EXPECT_EQ(run_cli("check").status, 2);
}

TEST(CliCheckTest, JsonlCarriesSchemaVersion)
{
    auto r = run_cli("check 0000 --format jsonl");
    EXPECT_EQ(r.status, 1);
    const auto record = nlohmann::json::parse(r.out);
    EXPECT_EQ(record["schema_version"], 1);
    EXPECT_EQ(record["type"], "check");
    EXPECT_EQ(record["self_avoiding"], false);
}

TEST(CliEnumerateTest, RootedTreeLeaves)
{
    auto r = run_cli("enumerate -k 2 --relation subword --root 0");
    EXPECT_EQ(r.status, 0);
    auto got = lines(r.out);
    ASSERT_EQ(got.size(), 93u);
    EXPECT_EQ(got.back(), "leaves=92 max_leaf_len=14 longest_sa=13");
    got.pop_back();
    EXPECT_EQ(got, oracle::read_lines(SELFAVOID_TEST_DATA "/rooted_tree_leaves.txt"));
}

TEST(CliEnumerateTest, UnaryAlphabet)
{
    auto r = run_cli("enumerate -k 1 --relation subword --root 0");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0000\nleaves=1 max_leaf_len=4 longest_sa=3\n");
}

TEST(CliEnumerateTest, DepthLimitTruncates)
{
    auto r = run_cli("enumerate -k 2 --relation subword --min-index 2 --depth-limit 20");
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("truncated=true"), std::string::npos);
}

// Depth 40 is out of reach of the default budget as well; a small budget keeps
// the test fast and exercises the same truncation path.
TEST(CliEnumerateTest, DepthFortyReportsTruncation)
{
    auto r = run_cli("enumerate -k 2 --relation subword --min-index 2 --depth-limit 40",
                     "AVOIDANCE_NODE_BUDGET=20000");
    EXPECT_EQ(r.status, 3);
    const auto summary = lines(r.out).back();
    EXPECT_NE(summary.find("truncated=true"), std::string::npos);
    EXPECT_NE(summary.find("budget_exhausted=true"), std::string::npos);
}

TEST(CliEnumerateTest, JsonlRecords)
{
    auto r = run_cli("enumerate -k 2 --root 0 --format jsonl");
    EXPECT_EQ(r.status, 0);
    const auto records = lines(r.out);
    ASSERT_EQ(records.size(), 93u);
    for (const auto& line : records) {
        const auto record = nlohmann::json::parse(line);
        EXPECT_EQ(record["schema_version"], 1);
    }
    const auto first = nlohmann::json::parse(records.front());
    EXPECT_EQ(first["type"], "leaf");
    EXPECT_EQ(first["word"], "0000");
    EXPECT_EQ(first["len"], 4);
    const auto summary = nlohmann::json::parse(records.back());
    EXPECT_EQ(summary["type"], "summary");
    EXPECT_EQ(summary["leaves"], 92);
    EXPECT_EQ(summary["truncated"], false);
}

TEST(CliEnumerateTest, BadEnvironmentIsUsageError)
{
    EXPECT_EQ(run_cli("enumerate -k 1", "AVOIDANCE_NODE_BUDGET=lots").status, 2);
    EXPECT_EQ(run_cli("enumerate -k 1", "AVOIDANCE_NODE_BUDGET=0").status, 2);
}

TEST(CliLongestTest, BinaryAndUnary)
{
    auto r = run_cli("longest -k 2");
    EXPECT_EQ(r.status, 0);
    auto got = lines(r.out);
    ASSERT_EQ(got.size(), 9u);
    EXPECT_EQ(got.back(), "length=13 words=8");

    r = run_cli("longest -k 1");
    EXPECT_EQ(r.out, "000\nlength=3 words=1\n");

    r = run_cli("longest -k 2 --relation subsequence");
    EXPECT_EQ(lines(r.out).back(), "length=11 words=4");
}

TEST(CliFlagsTest, UnknownFlagsAreRejected)
{
    EXPECT_EQ(run_cli("enumerate -k 2 --frobnicate").status, 2);
    EXPECT_EQ(run_cli("check 00 --verbose").status, 2);
    EXPECT_EQ(run_cli("frobnicate").status, 2);
    EXPECT_EQ(run_cli("").status, 2);
    EXPECT_EQ(run_cli("--help").status, 0);
}

TEST(CliGenerateTest, Examples)
{
    EXPECT_EQ(run_cli("generate --construction ternary --length 12").out, "220101101110\n");
    EXPECT_EQ(run_cli("generate --construction binary-offset2 --length 5").out, "00100\n");
    EXPECT_EQ(run_cli("generate --construction ternary --length 1").out, "2\n");
    EXPECT_EQ(run_cli("generate --construction cubic --length 5").status, 2);
    EXPECT_EQ(run_cli("generate --construction ternary --length 0").status, 2);
}

TEST(CliVerifyTest, Examples)
{
    auto r = run_cli("verify --construction ternary --length 316 --mode pairwise");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("weak_self_avoidance: pass"), std::string::npos);

    r = run_cli("verify --construction binary-offset2 --length 1024 --mode pairwise");
    EXPECT_EQ(r.status, 0);

    r = run_cli("verify --construction ternary --length 1048576 --mode structural");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("middle_block_rigidity: pass"), std::string::npos);
}

TEST(CliVerifyTest, FailureAndCap)
{
    auto r = run_cli("verify --construction binary-offset2 --length 64 --min-index 1");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("i=1 j=3"), std::string::npos);

    r = run_cli("verify --construction ternary --length 100000 --mode pairwise");
    EXPECT_EQ(r.status, 2);
    EXPECT_EQ(run_cli("verify --construction ternary --mode sideways").status, 2);
}

TEST(CliVerifyTest, WorkersDoNotChangeOutput)
{
    const auto one = run_cli("verify --construction ternary --length 2048 --workers 1");
    const auto four = run_cli("verify --construction ternary --length 2048 --workers 4");
    EXPECT_EQ(one.status, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST(CliRoundTripTest, GeneratedWordsPassCheck)
{
    for (int length : {1, 7, 40, 300}) {
        const std::string n = std::to_string(length);
        EXPECT_EQ(run_cli("check - --min-index 1",
                          "'" SELFAVOID_CLI "' generate --construction ternary --length " + n + " |")
                      .status,
                  0)
            << length;
        EXPECT_EQ(run_cli("check - --min-index 2",
                          "'" SELFAVOID_CLI "' generate --construction binary-offset2 --length " + n + " |")
                      .status,
                  0)
            << length;
    }
}

TEST(CliFormatTest, OutputIsByteIdenticalAcrossRuns)
{
    for (const char* args : {"enumerate -k 2", "longest -k 3 --depth-limit 12",
                             "verify --construction binary-offset2 --length 512 --mode structural"}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_EQ(a.out.find('\r'), std::string::npos);
    }
}
