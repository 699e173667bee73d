/*
 * selfavoid: C interface to the self-avoiding word library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions that can fail return sa_status; on
 * failure sa_last_error() describes the problem for the calling thread.
 * Window indices and positions are 1-based.
 */
#ifndef SELFAVOID_H
#define SELFAVOID_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SELFAVOID_BUILDING)
#    define SA_API __declspec(dllexport)
#  else
#    define SA_API __declspec(dllimport)
#  endif
#else
#  define SA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define SA_SCHEMA_VERSION 1

typedef enum sa_status {
    SA_OK = 0,
    SA_ERR_INVALID_ARGUMENT = 1,
    SA_ERR_OUT_OF_RANGE = 2,
    SA_ERR_OVERFLOW = 3,
    SA_ERR_NO_MEMORY = 4,
    SA_ERR_INTERNAL = 5
} sa_status;

typedef enum sa_relation { SA_SUBWORD = 0, SA_SUBSEQUENCE = 1 } sa_relation;

typedef enum sa_construction { SA_TERNARY_WSA = 0, SA_BINARY_OFFSET2 = 1 } sa_construction;

typedef struct sa_avoidance_spec {
    sa_relation relation;
    uint64_t min_index; /* >= 1 */
} sa_avoidance_spec;

typedef struct sa_violation {
    uint64_t i;
    uint64_t j;
} sa_violation;

typedef struct sa_word sa_word;
typedef struct sa_word_list sa_word_list;
typedef struct sa_tree sa_tree;
typedef struct sa_report sa_report;

SA_API const char* sa_version(void);
SA_API const char* sa_status_string(sa_status status);
/* Message for the most recent failure on this thread; "" if none. */
SA_API const char* sa_last_error(void);

/* ---- words ---------------------------------------------------------- */

/* digits need not be NUL-terminated. alphabet_size 0 infers 1 + max digit. */
SA_API sa_status sa_word_from_digits(const char* digits, size_t length,
                                     uint32_t alphabet_size, sa_word** out);
SA_API sa_status sa_word_from_symbols(const uint8_t* symbols, size_t length,
                                      uint32_t alphabet_size, sa_word** out);
SA_API void sa_word_free(sa_word* word);
SA_API size_t sa_word_length(const sa_word* word);
SA_API uint32_t sa_word_alphabet_size(const sa_word* word);
SA_API const uint8_t* sa_word_symbols(const sa_word* word);
/* NUL-terminated digit string, valid while the word lives. */
SA_API const char* sa_word_digits(const sa_word* word);

SA_API int sa_is_subword(const sa_word* needle, const sa_word* haystack);
SA_API int sa_is_subsequence(const sa_word* needle, const sa_word* haystack);

/* x[i..2i]; SA_ERR_OUT_OF_RANGE unless 1 <= i and 2i <= |x|. */
SA_API sa_status sa_window(const sa_word* x, uint64_t i, sa_word** out);

/* *found is 1 and *violation set when some pair violates, else *found is 0. */
SA_API sa_status sa_first_violation(const sa_word* x, sa_avoidance_spec spec,
                                    int* found, sa_violation* violation);
SA_API sa_status sa_is_self_avoiding(const sa_word* x, sa_avoidance_spec spec, int* result);

/* ---- word lists ----------------------------------------------------- */

SA_API void sa_word_list_free(sa_word_list* list);
SA_API size_t sa_word_list_size(const sa_word_list* list);
/* Borrowed; NULL when index is out of range. */
SA_API const sa_word* sa_word_list_at(const sa_word_list* list, size_t index);

/* ---- search --------------------------------------------------------- */

typedef struct sa_search_config {
    uint32_t alphabet_size;
    sa_avoidance_spec spec;
    uint64_t depth_limit;  /* 0 = unbounded */
    const sa_word* root;   /* NULL = empty word */
    uint64_t node_budget;  /* 0 = library default */
    int full_recheck;
} sa_search_config;

SA_API sa_search_config sa_search_config_default(void);

SA_API sa_status sa_enumerate_tree(const sa_search_config* config, sa_tree** out);
SA_API void sa_tree_free(sa_tree* tree);
SA_API const sa_word_list* sa_tree_leaves(const sa_tree* tree);
SA_API const sa_word_list* sa_tree_longest(const sa_tree* tree);
SA_API size_t sa_tree_max_leaf_length(const sa_tree* tree);
SA_API size_t sa_tree_max_self_avoiding_length(const sa_tree* tree);
/* 1 when the frontier was not exhausted (depth limit or node budget). */
SA_API int sa_tree_truncated(const sa_tree* tree);
/* 1 when the node budget stopped the search; leaves are then partial. */
SA_API int sa_tree_budget_exhausted(const sa_tree* tree);
SA_API uint64_t sa_tree_nodes_visited(const sa_tree* tree);

/* *length is a lower bound when *truncated is 1. budget_exhausted may be NULL. */
SA_API sa_status sa_longest_words(const sa_search_config* config, size_t* length,
                                  int* truncated, int* budget_exhausted,
                                  sa_word_list** words);

/* ---- constructions -------------------------------------------------- */

/* "ternary" or "binary-offset2". */
SA_API sa_status sa_construction_parse(const char* name, sa_construction* out);
SA_API const char* sa_construction_name(sa_construction id);
SA_API uint64_t sa_construction_min_index(sa_construction id);
SA_API uint64_t sa_construction_two_zero_index(sa_construction id);

SA_API sa_status sa_zero_position(uint64_t index, uint64_t* out);
SA_API sa_status sa_g_term(uint64_t n, uint64_t* out);
SA_API sa_status sa_generate(sa_construction id, uint64_t length, sa_word** out);

SA_API sa_status sa_two_zero_window_check(const sa_word* x, uint64_t i_min,
                                          int* found, uint64_t* failing_index);

/* Writes at most capacity run lengths to lengths (may be NULL) and the total
 * number of runs to *count. */
SA_API sa_status sa_block_lengths(const sa_word* x, uint64_t* lengths, size_t capacity,
                                  size_t* count);

/* Pairwise subword check of the length-prefix. min_index 0 uses the
 * construction's own; workers 0 or 1 runs sequentially. */
SA_API sa_status sa_verify_weak_self_avoidance(sa_construction id, uint64_t length,
                                               uint64_t min_index, uint32_t workers,
                                               int* found, sa_violation* violation);

SA_API sa_status sa_verify_structural(sa_construction id, uint64_t length, sa_report** out);
SA_API void sa_report_free(sa_report* report);
SA_API int sa_report_passed(const sa_report* report);
SA_API size_t sa_report_check_count(const sa_report* report);
/* Borrowed strings; NULL when index is out of range. */
SA_API const char* sa_report_check_name(const sa_report* report, size_t index);
SA_API const char* sa_report_check_detail(const sa_report* report, size_t index);
SA_API int sa_report_check_passed(const sa_report* report, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* SELFAVOID_H */
