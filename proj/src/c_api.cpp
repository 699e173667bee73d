// extern "C" surface over the C++ core. Exceptions never cross this
// boundary; they become sa_status codes plus a per-thread message.

#include "selfavoid/selfavoid.h"

#include "selfavoid/constructions.hpp"
#include "selfavoid/search.hpp"
#include "selfavoid/words.hpp"

#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

using namespace selfavoid;

struct sa_word {
    Word value;
    std::string digits;

    explicit sa_word(Word w) : value(std::move(w))
    {
        if (value.alphabet_size() <= kMaxDigitAlphabet)
            digits = value.to_digits();
    }
};

struct sa_word_list {
    std::vector<sa_word> words;
};

struct sa_tree {
    TreeSummary summary;
    sa_word_list leaves;
    sa_word_list longest;
};

struct sa_report {
    StructuralReport value;
};

namespace {

thread_local std::string last_error;

template <typename F>
sa_status guarded(F&& body) noexcept
{
    try {
        last_error.clear();
        body();
        return SA_OK;
    } catch (const std::overflow_error& e) {
        last_error = e.what();
        return SA_ERR_OVERFLOW;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return SA_ERR_OUT_OF_RANGE;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return SA_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SA_ERR_NO_MEMORY;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SA_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SA_ERR_INTERNAL;
    }
}

void require(bool condition, const char* message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

AvoidanceSpec to_spec(sa_avoidance_spec spec)
{
    require(spec.relation == SA_SUBWORD || spec.relation == SA_SUBSEQUENCE, "unknown relation");
    AvoidanceSpec out{spec.relation == SA_SUBWORD ? Relation::subword : Relation::subsequence,
                      static_cast<std::size_t>(spec.min_index)};
    out.validate();
    return out;
}

Construction to_construction(sa_construction id)
{
    require(id == SA_TERNARY_WSA || id == SA_BINARY_OFFSET2, "unknown construction");
    return id == SA_TERNARY_WSA ? Construction::ternary_wsa : Construction::binary_offset2;
}

SearchConfig to_config(const sa_search_config* config)
{
    require(config != nullptr, "config is NULL");
    SearchConfig out;
    out.alphabet_size = config->alphabet_size;
    out.spec = to_spec(config->spec);
    if (config->depth_limit != 0)
        out.depth_limit = static_cast<std::size_t>(config->depth_limit);
    if (config->root != nullptr)
        out.root = config->root->value;
    if (config->node_budget != 0)
        out.node_budget = config->node_budget;
    out.full_recheck = config->full_recheck != 0;
    return out;
}

sa_word_list to_list(const std::vector<Word>& words)
{
    sa_word_list out;
    out.words.reserve(words.size());
    for (const auto& w : words)
        out.words.emplace_back(w);
    return out;
}

void set_violation(const std::optional<Violation>& v, int* found, sa_violation* violation)
{
    require(found != nullptr, "found is NULL");
    *found = v.has_value() ? 1 : 0;
    if (v && violation != nullptr)
        *violation = {v->i, v->j};
}

} // namespace

extern "C" {

const char* sa_version(void)
{
    return "1.0.0";
}

const char* sa_status_string(sa_status status)
{
    switch (status) {
    case SA_OK: return "ok";
    case SA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SA_ERR_OUT_OF_RANGE: return "out of range";
    case SA_ERR_OVERFLOW: return "arithmetic overflow";
    case SA_ERR_NO_MEMORY: return "out of memory";
    case SA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sa_last_error(void)
{
    return last_error.c_str();
}

sa_status sa_word_from_digits(const char* digits, size_t length, uint32_t alphabet_size, sa_word** out)
{
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        require(digits != nullptr || length == 0, "digits is NULL");
        std::string_view text(digits == nullptr ? "" : digits, length);
        *out = new sa_word(Word::from_digits(text, alphabet_size));
    });
}

sa_status sa_word_from_symbols(const uint8_t* symbols, size_t length, uint32_t alphabet_size, sa_word** out)
{
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        require(symbols != nullptr || length == 0, "symbols is NULL");
        std::vector<Symbol> values(symbols, symbols + length);
        *out = new sa_word(Word(std::move(values), alphabet_size));
    });
}

void sa_word_free(sa_word* word)
{
    delete word;
}

size_t sa_word_length(const sa_word* word)
{
    return word == nullptr ? 0 : word->value.size();
}

uint32_t sa_word_alphabet_size(const sa_word* word)
{
    return word == nullptr ? 0 : word->value.alphabet_size();
}

const uint8_t* sa_word_symbols(const sa_word* word)
{
    return word == nullptr ? nullptr : word->value.symbols().data();
}

const char* sa_word_digits(const sa_word* word)
{
    return word == nullptr ? "" : word->digits.c_str();
}

int sa_is_subword(const sa_word* needle, const sa_word* haystack)
{
    if (needle == nullptr || haystack == nullptr)
        return 0;
    return is_subword(needle->value, haystack->value) ? 1 : 0;
}

int sa_is_subsequence(const sa_word* needle, const sa_word* haystack)
{
    if (needle == nullptr || haystack == nullptr)
        return 0;
    return is_subsequence(needle->value, haystack->value) ? 1 : 0;
}

sa_status sa_window(const sa_word* x, uint64_t i, sa_word** out)
{
    return guarded([&] {
        require(x != nullptr && out != nullptr, "NULL argument");
        *out = new sa_word(window(x->value, static_cast<std::size_t>(i)));
    });
}

sa_status sa_first_violation(const sa_word* x, sa_avoidance_spec spec, int* found, sa_violation* violation)
{
    return guarded([&] {
        require(x != nullptr, "word is NULL");
        set_violation(first_violation(x->value, to_spec(spec)), found, violation);
    });
}

sa_status sa_is_self_avoiding(const sa_word* x, sa_avoidance_spec spec, int* result)
{
    return guarded([&] {
        require(x != nullptr && result != nullptr, "NULL argument");
        *result = is_self_avoiding(x->value, to_spec(spec)) ? 1 : 0;
    });
}

void sa_word_list_free(sa_word_list* list)
{
    delete list;
}

size_t sa_word_list_size(const sa_word_list* list)
{
    return list == nullptr ? 0 : list->words.size();
}

const sa_word* sa_word_list_at(const sa_word_list* list, size_t index)
{
    if (list == nullptr || index >= list->words.size())
        return nullptr;
    return &list->words[index];
}

sa_search_config sa_search_config_default(void)
{
    sa_search_config config{};
    config.alphabet_size = 2;
    config.spec = {SA_SUBWORD, 1};
    config.node_budget = kDefaultNodeBudget;
    return config;
}

sa_status sa_enumerate_tree(const sa_search_config* config, sa_tree** out)
{
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        auto tree = std::make_unique<sa_tree>();
        tree->summary = enumerate_tree(to_config(config));
        tree->leaves = to_list(tree->summary.leaves);
        tree->longest = to_list(tree->summary.longest_self_avoiding);
        *out = tree.release();
    });
}

void sa_tree_free(sa_tree* tree)
{
    delete tree;
}

const sa_word_list* sa_tree_leaves(const sa_tree* tree)
{
    return tree == nullptr ? nullptr : &tree->leaves;
}

const sa_word_list* sa_tree_longest(const sa_tree* tree)
{
    return tree == nullptr ? nullptr : &tree->longest;
}

size_t sa_tree_max_leaf_length(const sa_tree* tree)
{
    return tree == nullptr ? 0 : tree->summary.max_leaf_length;
}

size_t sa_tree_max_self_avoiding_length(const sa_tree* tree)
{
    return tree == nullptr ? 0 : tree->summary.max_self_avoiding_length;
}

int sa_tree_truncated(const sa_tree* tree)
{
    return tree != nullptr && tree->summary.truncated ? 1 : 0;
}

int sa_tree_budget_exhausted(const sa_tree* tree)
{
    return tree != nullptr && tree->summary.budget_exhausted ? 1 : 0;
}

uint64_t sa_tree_nodes_visited(const sa_tree* tree)
{
    return tree == nullptr ? 0 : tree->summary.nodes_visited;
}

sa_status sa_longest_words(const sa_search_config* config, size_t* length, int* truncated,
                           int* budget_exhausted, sa_word_list** words)
{
    return guarded([&] {
        require(length != nullptr && truncated != nullptr && words != nullptr, "NULL argument");
        auto result = longest_words(to_config(config));
        auto list = std::make_unique<sa_word_list>(to_list(result.words));
        *length = result.length;
        *truncated = result.truncated ? 1 : 0;
        if (budget_exhausted != nullptr)
            *budget_exhausted = result.budget_exhausted ? 1 : 0;
        *words = list.release();
    });
}

sa_status sa_construction_parse(const char* name, sa_construction* out)
{
    return guarded([&] {
        require(name != nullptr && out != nullptr, "NULL argument");
        auto id = parse_construction(name);
        if (!id)
            throw std::invalid_argument(std::string("unknown construction '") + name +
                                        "' (expected ternary or binary-offset2)");
        *out = *id == Construction::ternary_wsa ? SA_TERNARY_WSA : SA_BINARY_OFFSET2;
    });
}

const char* sa_construction_name(sa_construction id)
{
    switch (id) {
    case SA_TERNARY_WSA: return "ternary";
    case SA_BINARY_OFFSET2: return "binary-offset2";
    }
    return "unknown";
}

uint64_t sa_construction_min_index(sa_construction id)
{
    return id == SA_BINARY_OFFSET2 ? claimed_min_index(Construction::binary_offset2)
                                   : claimed_min_index(Construction::ternary_wsa);
}

uint64_t sa_construction_two_zero_index(sa_construction id)
{
    return id == SA_BINARY_OFFSET2 ? two_zero_min_index(Construction::binary_offset2)
                                   : two_zero_min_index(Construction::ternary_wsa);
}

sa_status sa_zero_position(uint64_t index, uint64_t* out)
{
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = zero_position(index);
    });
}

sa_status sa_g_term(uint64_t n, uint64_t* out)
{
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = g_term(n);
    });
}

sa_status sa_generate(sa_construction id, uint64_t length, sa_word** out)
{
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = new sa_word(generate(to_construction(id), static_cast<std::size_t>(length)));
    });
}

sa_status sa_two_zero_window_check(const sa_word* x, uint64_t i_min, int* found, uint64_t* failing_index)
{
    return guarded([&] {
        require(x != nullptr && found != nullptr, "NULL argument");
        auto bad = two_zero_window_check(x->value, static_cast<std::size_t>(i_min));
        *found = bad.has_value() ? 1 : 0;
        if (bad && failing_index != nullptr)
            *failing_index = *bad;
    });
}

sa_status sa_block_lengths(const sa_word* x, uint64_t* lengths, size_t capacity, size_t* count)
{
    return guarded([&] {
        require(x != nullptr && count != nullptr, "NULL argument");
        auto runs = block_lengths(x->value);
        *count = runs.size();
        if (lengths != nullptr) {
            for (std::size_t k = 0; k < runs.size() && k < capacity; ++k)
                lengths[k] = runs[k];
        }
    });
}

sa_status sa_verify_weak_self_avoidance(sa_construction id, uint64_t length, uint64_t min_index,
                                        uint32_t workers, int* found, sa_violation* violation)
{
    return guarded([&] {
        std::optional<std::size_t> from;
        if (min_index != 0)
            from = static_cast<std::size_t>(min_index);
        auto v = verify_weak_self_avoidance(to_construction(id), static_cast<std::size_t>(length),
                                            from, workers == 0 ? 1 : workers);
        set_violation(v, found, violation);
    });
}

sa_status sa_verify_structural(sa_construction id, uint64_t length, sa_report** out)
{
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = new sa_report{verify_structural(to_construction(id), static_cast<std::size_t>(length))};
    });
}

void sa_report_free(sa_report* report)
{
    delete report;
}

int sa_report_passed(const sa_report* report)
{
    return report != nullptr && report->value.passed() ? 1 : 0;
}

size_t sa_report_check_count(const sa_report* report)
{
    return report == nullptr ? 0 : report->value.checks.size();
}

const char* sa_report_check_name(const sa_report* report, size_t index)
{
    if (report == nullptr || index >= report->value.checks.size())
        return nullptr;
    return report->value.checks[index].name.c_str();
}

const char* sa_report_check_detail(const sa_report* report, size_t index)
{
    if (report == nullptr || index >= report->value.checks.size())
        return nullptr;
    return report->value.checks[index].detail.c_str();
}

int sa_report_check_passed(const sa_report* report, size_t index)
{
    if (report == nullptr || index >= report->value.checks.size())
        return 0;
    return report->value.checks[index].passed ? 1 : 0;
}

} // extern "C"
