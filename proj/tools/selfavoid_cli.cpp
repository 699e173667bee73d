// selfavoid: command-line front end over the C API.
//
// Exit status: 0 pass, 1 a property fails, 2 usage error, 3 truncated search
// (depth limit reached or node budget exhausted).

#include "selfavoid/selfavoid.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

using json = nlohmann::ordered_json;

struct WordDeleter {
    void operator()(sa_word* w) const { sa_word_free(w); }
};
struct ListDeleter {
    void operator()(sa_word_list* l) const { sa_word_list_free(l); }
};
struct TreeDeleter {
    void operator()(sa_tree* t) const { sa_tree_free(t); }
};
struct ReportDeleter {
    void operator()(sa_report* r) const { sa_report_free(r); }
};
using WordPtr = std::unique_ptr<sa_word, WordDeleter>;
using ListPtr = std::unique_ptr<sa_word_list, ListDeleter>;
using TreePtr = std::unique_ptr<sa_tree, TreeDeleter>;
using ReportPtr = std::unique_ptr<sa_report, ReportDeleter>;

// Carries a library failure out to main with the exit status to use.
struct Failure {
    int exit_code;
    std::string message;
};

void ok(sa_status status)
{
    if (status == SA_OK)
        return;
    std::string message = std::string(sa_status_string(status)) + ": " + sa_last_error();
    throw Failure{kExitUsage, message};
}

enum class Format { text, jsonl };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"jsonl", Format::jsonl}};
const std::map<std::string, sa_relation> kRelations{{"subword", SA_SUBWORD},
                                                    {"subsequence", SA_SUBSEQUENCE}};

void emit(const json& record)
{
    json out = {{"schema_version", SA_SCHEMA_VERSION}};
    out.update(record);
    std::cout << out.dump() << '\n';
}

WordPtr parse_word(const std::string& digits, uint32_t alphabet_size)
{
    sa_word* w = nullptr;
    ok(sa_word_from_digits(digits.data(), digits.size(), alphabet_size, &w));
    return WordPtr(w);
}

std::string window_digits(const sa_word* x, uint64_t i)
{
    sa_word* w = nullptr;
    ok(sa_window(x, i, &w));
    WordPtr owned(w);
    return sa_word_digits(owned.get());
}

uint64_t node_budget_from_env()
{
    const char* raw = std::getenv("AVOIDANCE_NODE_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return 0;
    std::string_view text(raw);
    uint64_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
        throw Failure{kExitUsage, "AVOIDANCE_NODE_BUDGET must be a positive integer, got '" +
                                      std::string(text) + "'"};
    return value;
}

// ---- check -------------------------------------------------------------

struct CheckOptions {
    std::string word;
    sa_relation relation = SA_SUBWORD;
    uint64_t min_index = 1;
    uint32_t alphabet = 0;
    Format format = Format::text;
};

int run_check(CheckOptions opt)
{
    if (opt.word == "-") {
        opt.word.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        while (!opt.word.empty() && std::isspace(static_cast<unsigned char>(opt.word.back())))
            opt.word.pop_back();
    }
    WordPtr x = parse_word(opt.word, opt.alphabet);

    int found = 0;
    sa_violation v{};
    ok(sa_first_violation(x.get(), {opt.relation, opt.min_index}, &found, &v));

    if (!found) {
        if (opt.format == Format::jsonl)
            emit({{"type", "check"}, {"word", opt.word}, {"len", opt.word.size()}, {"self_avoiding", true}});
        else
            std::cout << "self-avoiding\n";
        return kExitPass;
    }

    const std::string wi = window_digits(x.get(), v.i);
    const std::string wj = window_digits(x.get(), v.j);
    if (opt.format == Format::jsonl)
        emit({{"type", "check"}, {"word", opt.word}, {"len", opt.word.size()}, {"self_avoiding", false},
              {"i", v.i}, {"j", v.j}, {"window_i", wi}, {"window_j", wj}});
    else
        std::cout << "violation i=" << v.i << " j=" << v.j << " window_i=" << wi << " window_j=" << wj << '\n';
    return kExitFail;
}

// ---- enumerate / longest ----------------------------------------------

struct SearchOptions {
    uint32_t alphabet = 2;
    sa_relation relation = SA_SUBWORD;
    uint64_t min_index = 1;
    std::string root;
    uint64_t depth_limit = 0;
    bool full_recheck = false;
    Format format = Format::text;
};

struct PreparedSearch {
    WordPtr root;
    sa_search_config config;
};

PreparedSearch prepare(const SearchOptions& opt)
{
    PreparedSearch out{nullptr, sa_search_config_default()};
    out.config.alphabet_size = opt.alphabet;
    out.config.spec = {opt.relation, opt.min_index};
    out.config.depth_limit = opt.depth_limit;
    out.config.full_recheck = opt.full_recheck ? 1 : 0;
    if (uint64_t budget = node_budget_from_env())
        out.config.node_budget = budget;
    if (!opt.root.empty()) {
        out.root = parse_word(opt.root, opt.alphabet);
        out.config.root = out.root.get();
    }
    return out;
}

void warn_budget(const sa_search_config& config, uint64_t nodes)
{
    std::cerr << "selfavoid: node budget of " << config.node_budget << " exhausted after " << nodes
              << " nodes; results are partial (raise AVOIDANCE_NODE_BUDGET)\n";
}

int run_enumerate(const SearchOptions& opt)
{
    PreparedSearch search = prepare(opt);
    sa_tree* raw = nullptr;
    ok(sa_enumerate_tree(&search.config, &raw));
    TreePtr tree(raw);

    const sa_word_list* leaves = sa_tree_leaves(tree.get());
    const size_t count = sa_word_list_size(leaves);
    const bool truncated = sa_tree_truncated(tree.get()) != 0;
    const bool exhausted = sa_tree_budget_exhausted(tree.get()) != 0;

    for (size_t k = 0; k < count; ++k) {
        const sa_word* leaf = sa_word_list_at(leaves, k);
        if (opt.format == Format::jsonl)
            emit({{"type", "leaf"}, {"word", sa_word_digits(leaf)}, {"len", sa_word_length(leaf)}});
        else
            std::cout << sa_word_digits(leaf) << '\n';
    }

    const size_t max_leaf = sa_tree_max_leaf_length(tree.get());
    const size_t longest = sa_tree_max_self_avoiding_length(tree.get());
    if (opt.format == Format::jsonl) {
        emit({{"type", "summary"}, {"leaves", count}, {"max_leaf_len", max_leaf}, {"longest_sa", longest},
              {"truncated", truncated}, {"budget_exhausted", exhausted},
              {"nodes", sa_tree_nodes_visited(tree.get())}});
    } else {
        std::cout << "leaves=" << count << " max_leaf_len=" << max_leaf << " longest_sa=" << longest;
        if (truncated)
            std::cout << " truncated=true";
        if (exhausted)
            std::cout << " budget_exhausted=true";
        std::cout << '\n';
    }
    if (exhausted)
        warn_budget(search.config, sa_tree_nodes_visited(tree.get()));
    return truncated ? kExitTruncated : kExitPass;
}

int run_longest(const SearchOptions& opt)
{
    PreparedSearch search = prepare(opt);
    size_t length = 0;
    int truncated = 0;
    int exhausted = 0;
    sa_word_list* raw = nullptr;
    ok(sa_longest_words(&search.config, &length, &truncated, &exhausted, &raw));
    ListPtr words(raw);

    const size_t count = sa_word_list_size(words.get());
    for (size_t k = 0; k < count; ++k) {
        const sa_word* w = sa_word_list_at(words.get(), k);
        if (opt.format == Format::jsonl)
            emit({{"type", "word"}, {"word", sa_word_digits(w)}, {"len", sa_word_length(w)}});
        else
            std::cout << sa_word_digits(w) << '\n';
    }
    if (opt.format == Format::jsonl) {
        emit({{"type", "summary"}, {"length", length}, {"words", count}, {"truncated", truncated != 0},
              {"budget_exhausted", exhausted != 0}});
    } else {
        std::cout << "length=" << length << " words=" << count;
        if (truncated)
            std::cout << " truncated=true";
        if (exhausted)
            std::cout << " budget_exhausted=true";
        std::cout << '\n';
    }
    if (exhausted)
        warn_budget(search.config, search.config.node_budget);
    return truncated ? kExitTruncated : kExitPass;
}

// ---- generate ----------------------------------------------------------

int run_generate(const std::string& construction, uint64_t length)
{
    sa_construction id{};
    ok(sa_construction_parse(construction.c_str(), &id));
    sa_word* raw = nullptr;
    ok(sa_generate(id, length, &raw));
    WordPtr x(raw);
    std::cout << sa_word_digits(x.get()) << '\n';
    return kExitPass;
}

// ---- verify ------------------------------------------------------------

struct VerifyOptions {
    std::string construction;
    uint64_t length = 1024;
    std::string mode = "pairwise";
    uint64_t min_index = 0;
    uint32_t workers = 1;
    uint64_t pairwise_cap = 16384;
    Format format = Format::text;
};

struct Line {
    std::string name;
    bool passed;
    std::string detail;
};

int report(const VerifyOptions& opt, const std::vector<Line>& lines)
{
    bool all = true;
    for (const auto& line : lines) {
        all = all && line.passed;
        if (opt.format == Format::jsonl)
            emit({{"type", "check"}, {"name", line.name}, {"passed", line.passed}, {"detail", line.detail}});
        else
            std::cout << line.name << ": " << (line.passed ? "pass" : "FAIL") << " (" << line.detail << ")\n";
    }
    if (opt.format == Format::jsonl)
        emit({{"type", "summary"}, {"construction", opt.construction}, {"len", opt.length},
              {"mode", opt.mode}, {"passed", all}});
    else
        std::cout << (all ? "verified " : "FAILED ") << opt.construction << " length=" << opt.length
                  << " mode=" << opt.mode << '\n';
    return all ? kExitPass : kExitFail;
}

int run_verify(const VerifyOptions& opt)
{
    sa_construction id{};
    ok(sa_construction_parse(opt.construction.c_str(), &id));

    if (opt.mode == "structural") {
        sa_report* raw = nullptr;
        ok(sa_verify_structural(id, opt.length, &raw));
        ReportPtr rep(raw);
        std::vector<Line> lines;
        for (size_t k = 0; k < sa_report_check_count(rep.get()); ++k)
            lines.push_back({sa_report_check_name(rep.get(), k), sa_report_check_passed(rep.get(), k) != 0,
                             sa_report_check_detail(rep.get(), k)});
        return report(opt, lines);
    }

    if (opt.length > opt.pairwise_cap)
        throw Failure{kExitUsage, "length " + std::to_string(opt.length) + " exceeds the pairwise cap of " +
                                      std::to_string(opt.pairwise_cap) + "; use --mode structural"};

    sa_word* raw = nullptr;
    ok(sa_generate(id, opt.length, &raw));
    WordPtr x(raw);
    std::vector<Line> lines;

    const uint64_t from = opt.min_index != 0 ? opt.min_index : sa_construction_min_index(id);
    int found = 0;
    sa_violation v{};
    ok(sa_verify_weak_self_avoidance(id, opt.length, from, opt.workers, &found, &v));
    if (found)
        lines.push_back({"weak_self_avoidance", false,
                         "i=" + std::to_string(v.i) + " j=" + std::to_string(v.j) +
                             " window_i=" + window_digits(x.get(), v.i) +
                             " window_j=" + window_digits(x.get(), v.j)});
    else
        lines.push_back({"weak_self_avoidance", true,
                         "subword, all pairs " + std::to_string(from) + " <= i < j <= " +
                             std::to_string(opt.length / 2)});

    const uint64_t two_zero_from = sa_construction_two_zero_index(id);
    uint64_t bad = 0;
    ok(sa_two_zero_window_check(x.get(), two_zero_from, &found, &bad));
    lines.push_back({"two_zero_windows", found == 0,
                     found ? "window " + std::to_string(bad) + " does not hold exactly two zeros"
                           : "windows " + std::to_string(two_zero_from) + ".." + std::to_string(opt.length / 2)});

    size_t runs = 0;
    ok(sa_block_lengths(x.get(), nullptr, 0, &runs));
    std::vector<uint64_t> blocks(runs);
    ok(sa_block_lengths(x.get(), blocks.data(), blocks.size(), &runs));
    const uint8_t* symbols = sa_word_symbols(x.get());
    if (!blocks.empty() && symbols[sa_word_length(x.get()) - 1] == 1)
        blocks.pop_back();
    std::set<uint64_t> seen;
    std::optional<uint64_t> repeated;
    for (uint64_t b : blocks) {
        if (!seen.insert(b).second) {
            repeated = b;
            break;
        }
    }
    lines.push_back({"distinct_blocks", !repeated,
                     repeated ? "block length " + std::to_string(*repeated) + " repeats"
                              : std::to_string(blocks.size()) + " complete blocks"});

    return report(opt, lines);
}

template <typename T>
void add_common_format(CLI::App* cmd, T& opt)
{
    cmd->add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("text");
}

void add_search_options(CLI::App* cmd, SearchOptions& opt)
{
    cmd->add_option("-k,--alphabet", opt.alphabet, "Alphabet size")
        ->check(CLI::Range(1u, 10u))
        ->capture_default_str();
    cmd->add_option("--relation", opt.relation, "subword or subsequence")
        ->transform(CLI::CheckedTransformer(kRelations, CLI::ignore_case))
        ->default_str("subword");
    cmd->add_option("--min-index", opt.min_index, "Smallest constrained window index")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--root", opt.root, "Fixed starting prefix (default: empty word)");
    cmd->add_option("--depth-limit", opt.depth_limit, "Stop expanding at this length (0 = unbounded)")
        ->capture_default_str();
    cmd->add_flag("--full-recheck", opt.full_recheck, "Recheck every pair at every node");
    add_common_format(cmd, opt);
}

} // namespace

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);

    CLI::App app{"Self-avoiding words under the subword and subsequence orders"};
    app.set_version_flag("--version", sa_version());
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Test a word for self-avoidance");
    check_cmd->add_option("word", check.word, "Digit string, or - to read stdin")->required();
    check_cmd->add_option("--relation", check.relation, "subword or subsequence")
        ->transform(CLI::CheckedTransformer(kRelations, CLI::ignore_case))
        ->default_str("subword");
    check_cmd->add_option("--min-index", check.min_index, "Smallest constrained window index")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check_cmd->add_option("-k,--alphabet", check.alphabet, "Alphabet size (default: 1 + max digit)")
        ->check(CLI::Range(0u, 10u));
    add_common_format(check_cmd, check);

    SearchOptions enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the leaves of the breadth-first tree");
    add_search_options(enumerate_cmd, enumerate);

    SearchOptions longest;
    auto* longest_cmd = app.add_subcommand("longest", "List the longest self-avoiding words");
    add_search_options(longest_cmd, longest);

    std::string construction;
    uint64_t generate_length = 0;
    auto* generate_cmd = app.add_subcommand("generate", "Print a prefix of an infinite construction");
    generate_cmd->add_option("--construction", construction, "ternary or binary-offset2")->required();
    generate_cmd->add_option("--length", generate_length, "Number of symbols")
        ->required()
        ->check(CLI::PositiveNumber);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a construction on a finite prefix");
    verify_cmd->add_option("--construction", verify.construction, "ternary or binary-offset2")->required();
    verify_cmd->add_option("--length", verify.length, "Prefix length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--mode", verify.mode, "pairwise or structural")
        ->check(CLI::IsMember({"pairwise", "structural"}))
        ->capture_default_str();
    verify_cmd->add_option("--min-index", verify.min_index,
                           "Override the smallest constrained window index (pairwise)");
    verify_cmd->add_option("--workers", verify.workers, "Threads for the pairwise scan")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    verify_cmd->add_option("--pairwise-cap", verify.pairwise_cap, "Largest length accepted in pairwise mode")
        ->capture_default_str();
    add_common_format(verify_cmd, verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*check_cmd)
            return run_check(check);
        if (*enumerate_cmd)
            return run_enumerate(enumerate);
        if (*longest_cmd)
            return run_longest(longest);
        if (*generate_cmd)
            return run_generate(construction, generate_length);
        return run_verify(verify);
    } catch (const Failure& f) {
        std::cerr << "selfavoid: " << f.message << '\n';
        return f.exit_code;
    }
}
