/* C interface to the structured solver library. All objects are opaque
 * handles; every fallible call returns an ss_status and, on failure, leaves a
 * message retrievable with ss_last_error() on the calling thread. */
#ifndef STRUCTSOLVE_H
#define STRUCTSOLVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef STRUCTSOLVE_BUILDING
#    define SS_API __declspec(dllexport)
#  else
#    define SS_API __declspec(dllimport)
#  endif
#else
#  define SS_API __attribute__((visibility("default")))
#endif

typedef enum {
  SS_OK = 0,
  SS_ERR_INVALID_ARGUMENT = 1,
  SS_ERR_PARSE = 2,
  SS_ERR_SINGULAR = 3,
  SS_ERR_NODE_COLLISION = 4,
  SS_ERR_INTERNAL = 5
} ss_status;

typedef enum {
  SS_PIVOT_NONE = 0,
  SS_PIVOT_PARTIAL = 1,
  SS_PIVOT_ROW1COL1 = 2
} ss_pivot;

typedef struct {
  double re;
  double im;
} ss_complex;

typedef struct ss_problem ss_problem;
typedef struct ss_factorization ss_factorization;
typedef struct ss_sweep ss_sweep;

typedef struct {
  double g1, g2, g3;
  double v_kk_norm;
  double hat_l_ratio;
  double hat_u_ratio;
  double b_max, b_min;
  double bound_cauchy;
  double bound_toeplitz;
  int g2_computed;
  int degenerate;
} ss_growth_report;

typedef struct {
  double abs_err;
  double rel_err;
  double residual;     /* NaN when not applicable */
  double forward_err;  /* NaN when not applicable */
} ss_error_report;

typedef struct {
  double delta;
  int exponent;
  ss_pivot strategy;
  int ok;
  double forward_err, residual, cond;
  double g1, g2, g3;
  double bmax_over_bmin;
  double backward_err;
  double max_imag;
} ss_sweep_record;

typedef struct {
  size_t n;
  const int* delta_exponents;
  size_t num_exponents;
  const ss_pivot* strategies;
  size_t num_strategies;
  int rhs_random; /* 0: all-ones right-hand side */
  uint64_t seed;
  int slope_min_exponent;
  int slope_max_exponent;
} ss_sweep_config;

SS_API const char* ss_version(void);
SS_API const char* ss_last_error(void);
SS_API const char* ss_pivot_name(ss_pivot p);
SS_API ss_status ss_pivot_parse(const char* name, ss_pivot* out);

/* Problems. Toeplitz coefficients are a_{1-n}..a_{n-1} (2n-1 values).
 * Cauchy phi is n x alpha and psi alpha x n, both row-major. */
SS_API ss_status ss_problem_toeplitz(size_t n, const ss_complex* a, ss_problem** out);
SS_API ss_status ss_problem_cauchy(size_t n, size_t alpha, const ss_complex* t, const ss_complex* s,
                                   const ss_complex* phi, const ss_complex* psi, ss_problem** out);
SS_API ss_status ss_problem_adversarial(size_t n, double delta, ss_problem** out);
SS_API ss_status ss_problem_cancellation(size_t n, double f_norm, uint64_t seed, ss_problem** out);
SS_API ss_status ss_problem_random_toeplitz(size_t n, uint64_t seed, ss_problem** out);
SS_API ss_status ss_problem_random_cauchy(size_t n, size_t alpha, uint64_t seed, ss_problem** out);
SS_API void ss_problem_free(ss_problem* p);
SS_API size_t ss_problem_order(const ss_problem* p);
SS_API int ss_problem_is_toeplitz(const ss_problem* p);
/* Dense matrix of the problem, n*n row-major. */
SS_API ss_status ss_problem_matrix(const ss_problem* p, ss_complex* out);
/* Min |v_ij| of the V matrix of the problem's (Cauchy) generators. */
SS_API ss_status ss_problem_v_min(const ss_problem* p, double* out);

/* Factorizations. */
SS_API ss_status ss_factor(const ss_problem* p, ss_pivot strategy, ss_factorization** out);
SS_API void ss_factorization_free(ss_factorization* f);
SS_API size_t ss_factorization_order(const ss_factorization* f);
/* Any output pointer may be NULL. L and U are n*n row-major; permutations
 * are 0-based maps with row i of P A being row row_perm[i] of A. */
SS_API ss_status ss_factorization_factors(const ss_factorization* f, ss_complex* L, ss_complex* U,
                                          size_t* row_perm, size_t* col_perm);
SS_API ss_status ss_solve(const ss_factorization* f, const ss_complex* b, ss_complex* x);
SS_API ss_status ss_growth(const ss_factorization* f, ss_growth_report* out);
SS_API ss_status ss_backward_error(const ss_factorization* f, ss_error_report* out);
/* Residual, forward error (against a dense GE/PP solution) and normwise
 * backward error of x for the problem's system with right-hand side b. */
SS_API ss_status ss_solve_quality(const ss_problem* p, const ss_complex* b, const ss_complex* x,
                                  ss_error_report* out);

/* Adversarial delta sweep. */
SS_API ss_status ss_sweep_run(const ss_sweep_config* config, ss_sweep** out);
SS_API void ss_sweep_free(ss_sweep* s);
SS_API size_t ss_sweep_record_count(const ss_sweep* s);
SS_API ss_status ss_sweep_get_record(const ss_sweep* s, size_t i, ss_sweep_record* out);
/* Error message of a failed record, "" when ok. */
SS_API const char* ss_sweep_record_error(const ss_sweep* s, size_t i);
/* Slopes are NaN when fewer than two points fall in the window. */
SS_API ss_status ss_sweep_slopes(const ss_sweep* s, ss_pivot strategy, double* forward_err_slope,
                                 double* residual_slope, size_t* points);
/* CSV text; valid until the sweep is freed. */
SS_API const char* ss_sweep_csv(const ss_sweep* s);

#ifdef __cplusplus
}
#endif

#endif /* STRUCTSOLVE_H */
