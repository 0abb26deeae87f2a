/*
 * C interface to the polybern library: exact Stirling-family numbers,
 * Hurwitz type poly-Bernoulli numbers and polynomials, chromatic
 * polynomials of small graphs, and the identity-verification suites.
 *
 * Conventions:
 *   - Rationals cross the boundary as "p/q" strings (lowest terms, q > 0;
 *     integers render without "/1"). Output strings are heap-allocated and
 *     must be released with pb_string_free().
 *   - Tables, polynomials and graphs are opaque handles with _free()
 *     functions.
 *   - Every function returns PB_OK on success; on failure the out
 *     parameters are untouched and pb_last_error_message() describes the
 *     violated precondition (thread-local).
 */

#ifndef POLYBERN_H
#define POLYBERN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pb_status {
  PB_OK = 0,
  PB_ERR_INVALID_ARGUMENT = 1,
  PB_ERR_PARSE = 2,
  PB_ERR_DOMAIN = 3,
  PB_ERR_ORDER_MISMATCH = 4,
  PB_ERR_ORDER_UNDERFLOW = 5,
  PB_ERR_COMPOSE_DOMAIN = 6,
  PB_ERR_SIZE_LIMIT = 7,
  PB_ERR_NON_INTEGER = 8,
  PB_ERR_VERIFY_FAILED = 9,
  PB_ERR_INTERNAL = 10
} pb_status;

typedef struct pb_table pb_table;
typedef struct pb_poly pb_poly;
typedef struct pb_graph pb_graph;

const char* pb_version(void);
const char* pb_status_name(pb_status status);
const char* pb_last_error_message(void);
void pb_string_free(char* s);

/* --- scalar sequences ------------------------------------------------- */

pb_status pb_stirling_first(int64_t n, int64_t i, char** out);
pb_status pb_stirling_second(int64_t n, int64_t i, char** out);
/* x is a rational "p/q" string. */
pb_status pb_weighted_stirling(int64_t n, int64_t i, const char* x, char** out);
pb_status pb_r_stirling(int64_t n, int64_t i, int64_t r, char** out);
pb_status pb_lah(int64_t m, int64_t k, char** out);
pb_status pb_m_stirling(int64_t n, int64_t k, int64_t m, char** out);
pb_status pb_weighted_m_stirling(int64_t n, int64_t k, const char* x, int64_t m,
                                 char** out);

pb_status pb_hurwitz_pb(int64_t n, int64_t k, const char* a, char** out);
/* algorithm: "explicit" (default when NULL), "form2" or "matrix". */
pb_status pb_m_hpb(int64_t n, int64_t m, int64_t k, const char* a,
                   const char* algorithm, char** out);
/* B_{n,m}^{(-kpos)}(a) by the m-Stirling formula; kpos >= 0. */
pb_status pb_m_hpb_negative(int64_t n, int64_t m, int64_t kpos, const char* a,
                            char** out);
pb_status pb_bernoulli(int64_t n, char** out);

/* --- triangles ---------------------------------------------------------
 * kind selects the family:
 *   "first"     s(n,i), rows 0..max_n               (arg unused)
 *   "second"    S(n,i), rows 0..max_n               (arg unused)
 *   "weighted"  ws_n^i(x), rows 0..max_n            (arg = x as "p/q")
 *   "r"         {n+r, i+r}_r, rows 0..max_n         (arg = r)
 *   "lah"       lah(m,k), rows m = 0..max_n         (arg unused)
 *   "mstirling" R_n^k(m), rows 0..max_n, k 0..n+m   (arg = m)
 * Cells outside the triangle report as undefined.
 */
pb_status pb_table_create(const char* kind, int64_t max_n, const char* arg,
                          pb_table** out);
int64_t pb_table_rows(const pb_table* t);
int64_t pb_table_cols(const pb_table* t);
int pb_table_defined(const pb_table* t, int64_t row, int64_t col);
pb_status pb_table_entry(const pb_table* t, int64_t row, int64_t col, char** out);
void pb_table_free(pb_table* t);

/* --- polynomials -------------------------------------------------------
 * Coefficients are indexed from the constant term upward.
 */
/* route: "convolution" (default when NULL) or "explicit". */
pb_status pb_hpb_poly(int64_t n, int64_t m, int64_t k, const char* a,
                      const char* route, pb_poly** out);
pb_status pb_hpb_poly_negative(int64_t n, int64_t m, int64_t kpos, const char* a,
                               pb_poly** out);
pb_status pb_corollary_poly(int64_t n, int64_t kpos, pb_poly** out);
/* Degree of the zero polynomial reports as -1. */
int64_t pb_poly_degree(const pb_poly* p);
pb_status pb_poly_coeff(const pb_poly* p, int64_t i, char** out);
pb_status pb_poly_eval(const pb_poly* p, const char* x, char** out);
/* Human-readable form, lowest degree first, e.g. "1/2 - x". */
pb_status pb_poly_str(const pb_poly* p, char** out);
void pb_poly_free(pb_poly* p);

/* --- graphs ------------------------------------------------------------
 * Edge-list text: first line "n <vertex_count>", then one "u v" per line.
 */
pb_status pb_graph_parse(const char* text, pb_graph** out);
int64_t pb_graph_vertices(const pb_graph* g);
int64_t pb_graph_edges(const pb_graph* g);
pb_status pb_graph_chromatic(const pb_graph* g, pb_poly** out);
pb_status pb_graph_pbar(const pb_graph* g, pb_poly** out);
pb_status pb_graph_pbar_bruteforce(const pb_graph* g, int64_t x, char** out);
void pb_graph_free(pb_graph* g);

/* --- verification -------------------------------------------------------
 * suite: "all", "duality", "egf", "formulas", "graphs", "polynomials" or
 * "tables". Writes the JSON report either way; returns PB_OK when every
 * check passed and PB_ERR_VERIFY_FAILED otherwise.
 */
pb_status pb_verify(const char* suite, uint64_t seed, char** json_report);

#ifdef __cplusplus
}
#endif

#endif /* POLYBERN_H */
