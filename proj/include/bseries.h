/* C interface to the B-series algebra library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions that can fail return a bs_status; on failure the thread-local
 * message from bs_last_error() describes the problem (parse errors include
 * the byte offset).  Strings returned through char** are owned by the caller
 * and must be released with bs_string_free().
 *
 * Text formats:
 *   tree        bracket grammar, tree ::= "." | "[" tree (" " tree)* "]"
 *   forest sum  terms "<rational>*(<forest>)" joined by " + "; "0" when empty
 *   assignment  rows joined by "; ", entries by spaces, untouched row first
 *   rational    "p/q" with q > 0, or plain "p" when q == 1
 *   vectors     components joined by ","; several vectors joined by ";"
 */

#ifndef BSERIES_H
#define BSERIES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bs_status {
  BS_OK = 0,
  BS_ERROR_PARSE = 1,      /* malformed bracket or rational text */
  BS_ERROR_FORMAT = 2,     /* malformed JSON document */
  BS_ERROR_DOMAIN = 3,     /* precondition violation */
  BS_ERROR_TRUNCATION = 4, /* request beyond a series truncation order */
  BS_ERROR_DIMENSION = 5,  /* vector dimension or argument-count mismatch */
  BS_ERROR_INVALID = 6     /* null handle or out-of-range argument */
} bs_status;

typedef struct bs_tree bs_tree;
typedef struct bs_series bs_series;
typedef struct bs_field bs_field;

const char* bs_version(void);

/* Message for the most recent failure on this thread. */
const char* bs_last_error(void);

void bs_string_free(char* text);

/* ---- trees ---- */

bs_status bs_tree_parse(const char* text, bs_tree** out);
bs_status bs_tree_render(const bs_tree* tree, char** out);
void bs_tree_free(bs_tree* tree);

int bs_tree_order(const bs_tree* tree);
bs_status bs_tree_symmetry(const bs_tree* tree, int64_t* out);
bs_status bs_tree_density(const bs_tree* tree, int64_t* out);

/* All canonical trees of order <= max_order, canonically sorted. */
bs_status bs_tree_list(int max_order, bs_tree*** out, size_t* out_count);
void bs_tree_list_free(bs_tree** trees, size_t count);

/* ---- subtrees, embeddings, assignments, pruning ---- */

bs_status bs_is_subtree(const bs_tree* sub, const bs_tree* tree, int* out);

/* One embedding per line: the images of the subtree vertices in pre-order.
 * Lines are sorted; the text is empty when no embedding exists. */
bs_status bs_embeddings(const bs_tree* sub, const bs_tree* tree, char** out,
                        size_t* out_count);

/* One assignment matrix per line in the assignment text form. */
bs_status bs_assignments(const bs_tree* sub, const bs_tree* tree, char** out,
                         size_t* out_count);

typedef enum bs_prune_method {
  BS_PRUNE_ASSIGNMENT = 0, /* canonical: one term per vertex subset */
  BS_PRUNE_EMBEDDING = 1   /* raw map count: sigma(sub) times the canonical */
} bs_prune_method;

bs_status bs_prune(const bs_tree* tree, const bs_tree* sub,
                   bs_prune_method method, char** out);

/* ---- series ---- */

bs_status bs_series_identity(int max_order, bs_series** out);
bs_status bs_series_exact_flow(int max_order, bs_series** out);
bs_status bs_series_random(uint64_t seed, int max_order, int in_class_b,
                           bs_series** out);
bs_status bs_series_from_json(const char* json_text, bs_series** out);
bs_status bs_series_to_json(const bs_series* series, char** out);
int bs_series_max_order(const bs_series* series);
/* tree == NULL requests the empty-tree coefficient. */
bs_status bs_series_coefficient(const bs_series* series, const bs_tree* tree,
                                char** out);
bs_status bs_series_compose(const bs_series* a, const bs_series* b,
                            int max_order, bs_series** out);
void bs_series_free(bs_series* series);

/* ---- vector fields and evaluation ---- */

bs_status bs_field_from_json(const char* json_text, bs_field** out);
int bs_field_dimension(const bs_field* field);
void bs_field_free(bs_field* field);

/* y0 is a comma-separated rational vector.  The output has one line per
 * h-order: "h^k: c1 c2 ...". */
bs_status bs_series_evaluate(const bs_series* series, const bs_field* field,
                             const char* y0, int max_order, char** out);

/* ---- verification ---- */

typedef struct bs_report {
  int equal;
  int first_mismatch; /* h-order of the first differing coefficient; -1 if equal */
  char* lhs;          /* space-separated coefficients at that order */
  char* rhs;
} bs_report;

void bs_report_clear(bs_report* report);

bs_status bs_verify_lemma1(const bs_field* field, const bs_series* a,
                           const bs_tree* sub, const char* y0, int max_order,
                           int embedding_semantics, bs_report* out);
/* vectors holds n test vectors ("v1;v2;..."). */
bs_status bs_verify_prop1(const bs_field* field, const bs_series* a, int n,
                          const char* vectors, const char* y0, int max_order,
                          bs_report* out);
bs_status bs_verify_theorem1(const bs_field* field, const bs_series* a,
                             const bs_series* b, const char* y0, int max_order,
                             bs_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BSERIES_H */
