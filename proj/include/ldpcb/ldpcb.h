/*
 * ldpcb: asymptotic minimum-distance bounds for generalized and irregular
 * LDPC codes over GF(q), with an exhaustive finite-field oracle.
 *
 * C interface. Objects are opaque handles released with the matching
 * *_free function. Every fallible call returns an ldpcb_status; on failure
 * ldpcb_last_error() describes the problem (per thread, valid until the next
 * failing call on that thread). All functions are safe to call concurrently
 * on distinct or shared const handles.
 */
#ifndef LDPCB_H
#define LDPCB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LDPCB_API __declspec(dllexport)
#else
#define LDPCB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ldpcb_status {
    LDPCB_OK = 0,
    LDPCB_ERR_DOMAIN = 1,      /* precondition violated */
    LDPCB_ERR_NO_SOLUTION = 2, /* requested rate unreachable for every delta > 0 */
    LDPCB_ERR_DEGENERATE = 3,  /* syndrome entropy vanishes on the whole omega range */
    LDPCB_ERR_GUARD = 4,       /* exhaustive enumeration above 10^7 codewords */
    LDPCB_ERR_UNSUPPORTED = 5, /* field order not available */
    LDPCB_ERR_PARSE = 6,
    LDPCB_ERR_IO = 7,
    LDPCB_ERR_INFEASIBLE = 8,  /* graph degree constraints cannot be met */
    LDPCB_ERR_NULL_ARGUMENT = 9,
    LDPCB_ERR_BUFFER_TOO_SMALL = 10,
    LDPCB_ERR_INTERNAL = 99
} ldpcb_status;

LDPCB_API const char* ldpcb_version(void);
LDPCB_API const char* ldpcb_last_error(void);
LDPCB_API const char* ldpcb_status_name(ldpcb_status status);

/* ---- entropy ---------------------------------------------------------- */

/* h_Q(x) with Q = q^power. */
LDPCB_API ldpcb_status ldpcb_q_ary_entropy(double x, uint64_t q, unsigned power, double* out);
LDPCB_API ldpcb_status ldpcb_entropy_of_distribution(const double* probs, size_t count, uint64_t q, double* out);
LDPCB_API ldpcb_status ldpcb_min_entropy_lower_bound(double p_star, uint64_t t, uint64_t q, double* out);

/* ---- weight enumerators ----------------------------------------------- */

typedef struct ldpcb_enumerator ldpcb_enumerator;

LDPCB_API ldpcb_status ldpcb_enumerator_spc(uint32_t q, size_t n0, ldpcb_enumerator** out);
LDPCB_API ldpcb_status ldpcb_enumerator_mds(uint32_t q, size_t n0, size_t d0, ldpcb_enumerator** out);
/* Text form: `n0 q k` line, then the n0+1 coefficients. */
LDPCB_API ldpcb_status ldpcb_enumerator_parse(const char* text, ldpcb_enumerator** out);
LDPCB_API void ldpcb_enumerator_free(ldpcb_enumerator* e);
LDPCB_API size_t ldpcb_enumerator_length(const ldpcb_enumerator* e);
LDPCB_API uint32_t ldpcb_enumerator_field_order(const ldpcb_enumerator* e);
LDPCB_API size_t ldpcb_enumerator_dimension(const ldpcb_enumerator* e);
LDPCB_API size_t ldpcb_enumerator_min_distance(const ldpcb_enumerator* e);
LDPCB_API int ldpcb_enumerator_equal(const ldpcb_enumerator* a, const ldpcb_enumerator* b);
/*
 * String outputs follow snprintf conventions: `needed` receives the length
 * without the terminator; a NULL or short buffer yields
 * LDPCB_ERR_BUFFER_TOO_SMALL (the buffer is left untouched).
 */
LDPCB_API ldpcb_status ldpcb_enumerator_coefficient(const ldpcb_enumerator* e, size_t weight, char* buf, size_t cap,
                                                    size_t* needed);
LDPCB_API ldpcb_status ldpcb_enumerator_to_text(const ldpcb_enumerator* e, char* buf, size_t cap, size_t* needed);
LDPCB_API ldpcb_status ldpcb_enumerator_evaluate(const ldpcb_enumerator* e, double s, double* out);
LDPCB_API ldpcb_status ldpcb_spc_closed_form(uint32_t q, size_t n0, double s, double* out);

/* ---- parity-check matrices -------------------------------------------- */

typedef struct ldpcb_matrix ldpcb_matrix;

/* Row-major entries in [0, q). */
LDPCB_API ldpcb_status ldpcb_matrix_create(size_t rows, size_t cols, uint32_t q, const uint8_t* entries,
                                           ldpcb_matrix** out);
/* Text form: `N M q` header, then M lines of N integers. */
LDPCB_API ldpcb_status ldpcb_matrix_parse(const char* text, ldpcb_matrix** out);
LDPCB_API void ldpcb_matrix_free(ldpcb_matrix* m);
LDPCB_API size_t ldpcb_matrix_rows(const ldpcb_matrix* m);
LDPCB_API size_t ldpcb_matrix_cols(const ldpcb_matrix* m);
LDPCB_API uint32_t ldpcb_matrix_field_order(const ldpcb_matrix* m);
LDPCB_API ldpcb_status ldpcb_matrix_entry(const ldpcb_matrix* m, size_t row, size_t col, uint8_t* out);
LDPCB_API ldpcb_status ldpcb_matrix_to_text(const ldpcb_matrix* m, char* buf, size_t cap, size_t* needed);
LDPCB_API ldpcb_status ldpcb_matrix_rank(const ldpcb_matrix* m, size_t* out);
/* out receives rows(m) symbols. */
LDPCB_API ldpcb_status ldpcb_matrix_syndrome(const ldpcb_matrix* m, const uint8_t* word, size_t length, uint8_t* out);
/* *out = -1 for the zero code. */
LDPCB_API ldpcb_status ldpcb_matrix_min_distance(const ldpcb_matrix* m, int64_t* out);
LDPCB_API ldpcb_status ldpcb_matrix_enumerator(const ldpcb_matrix* m, ldpcb_enumerator** out);

/* ---- Tanner graphs and the finite-length ensemble oracle -------------- */

typedef struct ldpcb_graph ldpcb_graph;

LDPCB_API ldpcb_status ldpcb_graph_create(size_t variables, size_t checks, const size_t* edge_variables,
                                          const size_t* edge_checks, size_t edge_count, ldpcb_graph** out);
LDPCB_API ldpcb_status ldpcb_graph_sample_regular(size_t ell, size_t n0, size_t n, uint64_t seed, ldpcb_graph** out);
LDPCB_API void ldpcb_graph_free(ldpcb_graph* g);
LDPCB_API size_t ldpcb_graph_variables(const ldpcb_graph* g);
LDPCB_API size_t ldpcb_graph_checks(const ldpcb_graph* g);
LDPCB_API size_t ldpcb_graph_edge_count(const ldpcb_graph* g);
LDPCB_API ldpcb_status ldpcb_graph_edge(const ldpcb_graph* g, size_t index, size_t* variable, size_t* check);
/*
 * labels: one nonzero label per edge, or NULL to draw labels from `seed`.
 * constituent: optional m0 x n0 parity-check of a generalized constituent
 * code (NULL for single parity checks).
 */
LDPCB_API ldpcb_status ldpcb_graph_parity_check(const ldpcb_graph* g, uint32_t q, const uint8_t* labels, uint64_t seed,
                                                const ldpcb_matrix* constituent, ldpcb_matrix** out);

typedef struct ldpcb_smoke_stats {
    double mean;
    double min;
    double max;
} ldpcb_smoke_stats;

/* distances: optional array of `trials` entries receiving each exact d. */
LDPCB_API ldpcb_status ldpcb_ensemble_smoke(uint32_t q, size_t ell, size_t n0, size_t n, size_t trials, uint64_t seed,
                                            size_t* distances, ldpcb_smoke_stats* out);

/* ---- row degree distributions and code descriptions ------------------- */

typedef struct ldpcb_rho ldpcb_rho;

LDPCB_API ldpcb_status ldpcb_rho_create(const uint32_t* degrees, const double* fractions, size_t count,
                                        ldpcb_rho** out);
/* `i:frac,i:frac,...`, fractions summing to 1 within 1e-9. */
LDPCB_API ldpcb_status ldpcb_rho_parse(const char* text, ldpcb_rho** out);
LDPCB_API void ldpcb_rho_free(ldpcb_rho* r);
LDPCB_API ldpcb_status ldpcb_rho_mean_degree(const ldpcb_rho* r, double* out);
LDPCB_API ldpcb_status ldpcb_rho_evaluate(const ldpcb_rho* r, double x, double* out);

typedef struct ldpcb_code ldpcb_code;

/* `spc:<n0>`, `mds:<n0>:<d0>`, `file:<enumerator path>` or `rho:<i:frac,...>`. */
LDPCB_API ldpcb_status ldpcb_code_parse(uint32_t q, const char* text, ldpcb_code** out);
LDPCB_API ldpcb_status ldpcb_code_from_constituent(const ldpcb_enumerator* e, ldpcb_code** out);
LDPCB_API ldpcb_status ldpcb_code_from_rho(const ldpcb_rho* r, ldpcb_code** out);
LDPCB_API void ldpcb_code_free(ldpcb_code* c);
LDPCB_API ldpcb_status ldpcb_code_describe(const ldpcb_code* c, char* buf, size_t cap, size_t* needed);

/* ---- constant-weight rate bounds -------------------------------------- */

/* Registered names: "composite", "zero", "zero-floor". */
LDPCB_API size_t ldpcb_cw_bound_count(void);
LDPCB_API const char* ldpcb_cw_bound_name(size_t index);
LDPCB_API ldpcb_status ldpcb_cw_evaluate(const char* name, uint32_t q, double omega, double delta, double* out);

/* ---- distance bounds -------------------------------------------------- */

typedef struct ldpcb_bound_result {
    double rate_bound;
    double omega_star;
    double objective;
} ldpcb_bound_result;

typedef struct ldpcb_inversion {
    double delta;
    double omega_star;
    double rate_bound;
} ldpcb_inversion;

LDPCB_API ldpcb_status ldpcb_p0_regular(const ldpcb_enumerator* constituent, double omega, double* out);
LDPCB_API ldpcb_status ldpcb_rate_bound_regular(const ldpcb_enumerator* constituent, double delta, const char* cw,
                                                ldpcb_bound_result* out);
LDPCB_API ldpcb_status ldpcb_rate_bound_irregular(uint32_t q, const ldpcb_rho* rho, double delta, const char* cw,
                                                  ldpcb_bound_result* out);
LDPCB_API ldpcb_status ldpcb_rate_bound(uint32_t q, const ldpcb_code* code, double delta, const char* cw,
                                        ldpcb_bound_result* out);
/* Samples the maximized ratio at `points` uniform omegas in [delta/2, 1]. */
LDPCB_API ldpcb_status ldpcb_rate_bound_trace(uint32_t q, const ldpcb_code* code, double delta, const char* cw,
                                              size_t points, double* omegas, double* values);
LDPCB_API ldpcb_status ldpcb_invert_to_delta(uint32_t q, const ldpcb_code* code, double rate, const char* cw,
                                             ldpcb_inversion* out);
LDPCB_API ldpcb_status ldpcb_gv_delta(uint32_t q, double rate, double* out);
LDPCB_API ldpcb_status ldpcb_regular_comparison(uint32_t q, const ldpcb_rho* rho, double delta, const char* cw,
                                                double* irregular_bound, double* regular_bound, int* dominates);

#ifdef __cplusplus
}
#endif

#endif /* LDPCB_H */
