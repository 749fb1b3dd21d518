#ifndef QWALL_QWALL_H
#define QWALL_QWALL_H

/*
 * C interface to the partition-wall force library.
 *
 * Every fallible call returns a qwall_status. On failure the message of the
 * most recent error on the calling thread is available from
 * qwall_last_error() until the next failing call on that thread. Output
 * parameters are left untouched on failure.
 *
 * Sweeps are driven through two opaque handles: a qwall_sweep_config built
 * up with setters, and the qwall_sweep_result it produces. Both must be
 * released with their *_destroy function; destroying NULL is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QWALL_API __declspec(dllexport)
#elif defined(__GNUC__)
#define QWALL_API __attribute__((visibility("default")))
#else
#define QWALL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qwall_status {
  QWALL_OK = 0,
  QWALL_ERR_DOMAIN = 1,           /* argument outside the operation's domain */
  QWALL_ERR_INVALID_ARGUMENT = 2, /* malformed config or null pointer */
  QWALL_ERR_SOLVER = 3,           /* root finding did not converge */
  QWALL_ERR_NUMERIC = 4,          /* quadrature did not converge */
  QWALL_ERR_OUT_OF_RANGE = 5,     /* approximation left its defined range */
  QWALL_ERR_INTERNAL = 6
} qwall_status;

typedef enum qwall_side { QWALL_SIDE_PLUS = 0, QWALL_SIDE_MINUS = 1 } qwall_side;

typedef enum qwall_method {
  QWALL_METHOD_NUMERIC = 0,
  QWALL_METHOD_LOW_T = 1,
  QWALL_METHOD_LINEAR = 2,
  QWALL_METHOD_SEMI_ANALYTIC = 3,
  QWALL_METHOD_HIGH_T = 4
} qwall_method;

typedef enum qwall_grid_scale {
  QWALL_GRID_LINEAR = 0,
  QWALL_GRID_LOG = 1
} qwall_grid_scale;

typedef enum qwall_row_status {
  QWALL_ROW_OK = 0,
  QWALL_ROW_OUT_OF_RANGE = 1,
  QWALL_ROW_ERROR = 2
} qwall_row_status;

typedef struct qwall_alpha_solution {
  double alpha;
  double shifted_alpha;
  double residual;
  int64_t levels_used;
  int32_t iterations;
} qwall_alpha_solution;

typedef struct qwall_force_pair {
  double f_plus;
  double f_minus;
  double delta_f;
} qwall_force_pair;

/* A field is meaningful only when its has_* flag is nonzero. */
typedef struct qwall_sweep_row {
  double t;
  qwall_method method;
  qwall_row_status status;
  int has_alpha_plus;
  double alpha_plus;
  int has_alpha_minus;
  double alpha_minus;
  int has_f_plus;
  double f_plus;
  int has_f_minus;
  double f_minus;
  int has_delta_f;
  double delta_f;
} qwall_sweep_row;

typedef struct qwall_sweep_config qwall_sweep_config;
typedef struct qwall_sweep_result qwall_sweep_result;

QWALL_API const char* qwall_version(void);
QWALL_API const char* qwall_last_error(void);
QWALL_API const char* qwall_status_name(qwall_status status);

/* "numeric", "low-t", "linear", "semi-analytic", "high-t"; NULL if unknown. */
QWALL_API const char* qwall_method_name(qwall_method method);
QWALL_API qwall_status qwall_method_from_name(const char* name,
                                              qwall_method* out);
/* "ok", "out-of-range", "error" */
QWALL_API const char* qwall_row_status_name(qwall_row_status status);

/* Spectrum */
QWALL_API qwall_status qwall_energy_level(qwall_side side, int64_t n,
                                          double* out);
QWALL_API double qwall_energy_level_extended(qwall_side side, int64_t n);

/* Occupations and the particle-number constraint */
QWALL_API qwall_status qwall_occupation(double alpha, double beta,
                                        double energy, double* out);
QWALL_API qwall_status qwall_total_number(qwall_side side, double alpha,
                                          double beta, double term_tol,
                                          double* out);
QWALL_API qwall_status qwall_solve_alpha(qwall_side side, int64_t particles,
                                         double temperature, double tol,
                                         qwall_alpha_solution* out);

/* Exact forces */
QWALL_API qwall_status qwall_half_force(qwall_side side, int64_t particles,
                                        double temperature, double tol,
                                        double* out);
QWALL_API qwall_status qwall_net_force(int64_t particles, double temperature,
                                       double tol, qwall_force_pair* out);
QWALL_API qwall_status qwall_net_force_zero_t(int64_t particles, double* out);

/* Approximations */
QWALL_API qwall_status qwall_delta_f_low_t(int64_t particles,
                                           double temperature, double* out);
/* in_range may be NULL. */
QWALL_API qwall_status qwall_delta_f_linear(int64_t particles,
                                            double temperature, double* out,
                                            int* in_range);
QWALL_API qwall_status qwall_semi_analytic_alpha(qwall_side side,
                                                 int64_t particles,
                                                 double temperature,
                                                 double* out);
QWALL_API qwall_status qwall_semi_analytic_delta_f(int64_t particles,
                                                   double temperature,
                                                   double* out);
QWALL_API qwall_status qwall_delta_f_high_t(int64_t particles,
                                            double temperature, double* out);
QWALL_API qwall_status qwall_bose_integral_closed(double alpha, double* out);
QWALL_API qwall_status qwall_bose_integral_quadrature(double alpha,
                                                      double* out);
/* direct != 0 selects the level-by-level sum, otherwise the resummed one. */
QWALL_API qwall_status qwall_theta_partition_sum(qwall_side side, int64_t k,
                                                 double beta, int direct,
                                                 double* out);
QWALL_API qwall_status qwall_poisson_force_sum(qwall_side side, int64_t k,
                                               double beta, int direct,
                                               double* out);
/* valid may be NULL; set to 1 when 0 < q < 1. */
QWALL_API qwall_status qwall_fugacity_expansion(qwall_side side,
                                                int64_t particles, double beta,
                                                double* q_leading,
                                                double* q_subleading,
                                                int* valid);

/* Sweeps. A fresh config holds the defaults: N = 100, t in [0.01, 160],
 * 400 log-spaced points, method numeric, tolerance 1e-12. */
QWALL_API qwall_sweep_config* qwall_sweep_config_create(void);
QWALL_API void qwall_sweep_config_destroy(qwall_sweep_config* config);
QWALL_API qwall_status qwall_sweep_config_set_particles(
    qwall_sweep_config* config, int64_t particles);
QWALL_API qwall_status qwall_sweep_config_set_grid(qwall_sweep_config* config,
                                                   double t_min, double t_max,
                                                   int64_t points,
                                                   qwall_grid_scale scale);
QWALL_API qwall_status qwall_sweep_config_set_tolerance(
    qwall_sweep_config* config, double tol);
/* Replaces the method set. */
QWALL_API qwall_status qwall_sweep_config_set_methods(
    qwall_sweep_config* config, const qwall_method* methods, size_t count);

/* Fails only on an invalid config; per-point failures become error rows. */
QWALL_API qwall_status qwall_sweep_run(const qwall_sweep_config* config,
                                       qwall_sweep_result** out);
QWALL_API void qwall_sweep_result_destroy(qwall_sweep_result* result);
QWALL_API size_t qwall_sweep_result_size(const qwall_sweep_result* result);
QWALL_API qwall_status qwall_sweep_result_row(const qwall_sweep_result* result,
                                              size_t index,
                                              qwall_sweep_row* out);
/* Diagnostic for an error row, "" otherwise. Owned by the result. */
QWALL_API const char* qwall_sweep_result_message(
    const qwall_sweep_result* result, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* QWALL_QWALL_H */
