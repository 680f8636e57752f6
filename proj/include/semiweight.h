/* semiweight — numerical semigroup weight kernel, C API.
 *
 * Handles are opaque; every function that can fail returns an sw_status and
 * leaves a human-readable message in sw_last_error() (thread-local). Strings
 * returned through char** are allocated by the library and must be released
 * with sw_string_free().
 */
#ifndef SEMIWEIGHT_H
#define SEMIWEIGHT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
  SW_OK = 0,
  SW_ERR_ARGUMENT = 1,
  SW_ERR_EMPTY_GENERATORS = 2,
  SW_ERR_NON_COPRIME = 3,
  SW_ERR_NOT_CLOSED = 4,
  SW_ERR_WRONG_CARDINALITY = 5,
  SW_ERR_GENUS_MISMATCH = 6,
  SW_ERR_NO_NONZERO_RESIDUE = 7,
  SW_ERR_HYPOTHESIS_VIOLATED = 8,
  SW_ERR_OUT_OF_DOMAIN = 9,
  SW_ERR_PRECONDITION = 10,
  SW_ERR_GENUS_TOO_SMALL = 11,
  SW_ERR_EMPTY_GAP_SET = 12,
  SW_ERR_RESOURCE_LIMIT = 13,
  SW_ERR_IO = 14,
  SW_ERR_INTERNAL = 15
} sw_status;

typedef struct sw_semigroup sw_semigroup;

const char* sw_version(void);
const char* sw_status_name(sw_status status);
/* Message from the most recent failing call on this thread ("" if none). */
const char* sw_last_error(void);
void sw_string_free(char* text);

/* ---- semigroup handles -------------------------------------------------- */

sw_status sw_semigroup_from_generators(const int64_t* gens, size_t count,
                                       sw_semigroup** out);
sw_status sw_semigroup_from_truncation(const int64_t* trunc, size_t count,
                                       int64_t genus, sw_semigroup** out);
sw_status sw_semigroup_from_gaps(const int64_t* gaps, size_t count,
                                 sw_semigroup** out);
void sw_semigroup_free(sw_semigroup* s);

int64_t sw_semigroup_genus(const sw_semigroup* s);
int64_t sw_semigroup_weight(const sw_semigroup* s);
int64_t sw_semigroup_inflection(const sw_semigroup* s);
int64_t sw_semigroup_conductor(const sw_semigroup* s);
int64_t sw_semigroup_multiplicity(const sw_semigroup* s);
/* 1 if x is a member (membership is total: everything above 2*genus). */
int sw_semigroup_contains(const sw_semigroup* s, int64_t x);

/* {"genus":..,"gaps":[..],"truncation":[..],"generators":[..]} */
sw_status sw_semigroup_to_json(const sw_semigroup* s, char** out_json);
/* {"genus":..,"weight":..,"inflection":..,"gaps":[..]} */
sw_status sw_weight_report_json(const sw_semigroup* s, char** out_json);

/* JSON array of {a+b : a in A, b in B, a+b <= cap}; cap < 0 means no cap. */
sw_status sw_sumset_json(const int64_t* a, size_t a_count, const int64_t* b,
                         size_t b_count, int64_t cap, char** out_json);

/* ---- (N, gamma) families ------------------------------------------------ */

sw_status sw_is_hyperelliptic(const sw_semigroup* s, int64_t N, int64_t gamma,
                              int* out);
sw_status sw_residue_classes_json(const sw_semigroup* s, int64_t modulus,
                                  char** out_json);
sw_status sw_analyze_json(const sw_semigroup* s, int64_t N, int64_t gamma,
                          char** out_json);
/* Weight bounds for the family at (N, gamma, g). */
sw_status sw_bounds_json(int64_t N, int64_t gamma, int64_t g, char** out_json);

/* ---- closed-form constructions ------------------------------------------ */

/* kind is one of "ct", "bc", "sn", "snstar" (case-insensitive). */
sw_status sw_construct_json(const char* kind, int64_t N, int64_t g,
                            int64_t gamma, char** out_json);
sw_status sw_sn_gap_classes_json(int64_t N, int64_t g, int64_t gamma,
                                 char** out_json);

/* ---- realizability criterion --------------------------------------------- */

sw_status sw_n_fold_gap_sums_json(const sw_semigroup* s, int64_t n,
                                  char** out_json);
sw_status sw_buchweitz_json(const sw_semigroup* s, int64_t n_max,
                            char** out_json);
/* Criterion rows for the S_N construction, with closed-form cardinalities. */
sw_status sw_buchweitz_sn_json(int64_t N, int64_t g, int64_t gamma,
                               int64_t n_max, char** out_json);
sw_status sw_sn_closed_form_card(int64_t N, int64_t g, int64_t gamma,
                                 int64_t n, int64_t* out);

/* ---- exhaustive exploration ---------------------------------------------- */

/* Called once per semigroup with its JSON line; return nonzero to stop. */
typedef int (*sw_emit_cb)(const char* json_line, void* user);

/* Enumerate genus g (hyper = 0), or the (N, gamma) family of genus g
 * (hyper = 1), in canonical gap order. node_cap = 0 keeps the default. */
sw_status sw_enumerate(int64_t g, int hyper, int64_t N, int64_t gamma,
                       uint64_t node_cap, int workers, sw_emit_cb cb,
                       void* user);
sw_status sw_search_max_json(int64_t N, int64_t gamma, int64_t g,
                             uint64_t node_cap, int workers, char** out_json);
sw_status sw_threshold_scan_json(int64_t N, int64_t gamma, int64_t g_lo,
                                 int64_t g_hi, uint64_t node_cap, int workers,
                                 char** out_json);
/* Same scan as a plain text table (g,max_weight,ref_weight,equal rows plus a
 * final g_star= line). */
sw_status sw_threshold_scan_table(int64_t N, int64_t gamma, int64_t g_lo,
                                  int64_t g_hi, uint64_t node_cap, int workers,
                                  char** out_text);

/* ---- rendering and reports ----------------------------------------------- */

/* format is "ascii" or "svg"; out gets the art only. */
sw_status sw_dyck_render(const sw_semigroup* s, const char* format,
                         char** out_art);
/* Full rendering record as JSON (grid_size, path, shaded_cells, format, art). */
sw_status sw_dyck_json(const sw_semigroup* s, const char* format,
                       char** out_json);

/* Grid sweep over a JSON spec; CSV lands in out_csv, per-cell diagnostics for
 * out-of-domain cells in out_notes (may be empty). */
sw_status sw_sweep_csv(const char* spec_json, uint64_t node_cap, int workers,
                       char** out_csv, char** out_notes);

#ifdef __cplusplus
}
#endif

#endif /* SEMIWEIGHT_H */
