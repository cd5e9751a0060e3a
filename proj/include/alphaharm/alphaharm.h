/*
 * alphaharm: α-harmonic functions on the unit disk.
 *
 * Every fallible call returns an ah_status and writes results through out
 * pointers. On failure, ah_last_error() describes the problem (per thread).
 * Strings returned through char** are heap-allocated and must be released
 * with ah_string_free; opaque handles have their own *_free functions, which
 * accept NULL.
 */
#ifndef ALPHAHARM_H
#define ALPHAHARM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AH_API __declspec(dllexport)
#else
#define AH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ah_status {
  AH_OK = 0,
  AH_ERR_DOMAIN = 1,        /* argument outside the mathematical domain */
  AH_ERR_ARGUMENT = 2,      /* malformed or inconsistent request */
  AH_ERR_ACCURACY = 3,      /* series or iteration budget exhausted */
  AH_ERR_PRECONDITION = 4,  /* data violates an operation's precondition */
  AH_ERR_PARSE = 5,         /* boundary JSON or expression text */
  AH_ERR_IO = 6,
  AH_ERR_INTERNAL = 7,
  AH_ERR_NULL = 8           /* required pointer was NULL */
} ah_status;

typedef struct ah_boundary ah_boundary;
typedef struct ah_series ah_series;
typedef struct ah_report ah_report;

AH_API const char* ah_version(void);
AH_API const char* ah_last_error(void);
AH_API const char* ah_status_name(ah_status status);
AH_API void ah_string_free(char* s);

/* Special functions. */
AH_API ah_status ah_gamma(double x, double* out);
AH_API ah_status ah_log_gamma(double x, double* out, int* sign);
AH_API ah_status ah_beta(double p, double q, double* out);
AH_API ah_status ah_hyp2f1(double a, double b, double c, double x, double* out);
AH_API ah_status ah_hyp2f1_at_one(double a, double b, double c, double* out);
AH_API ah_status ah_hyp2f1_derivative(double a, double b, double c, double x,
                                      double* out);
AH_API ah_status ah_euler_transform(double a, double b, double c, double x,
                                    double* out);

/* Kernel K_α. Points are (re, im) with re² + im² < 1. */
AH_API ah_status ah_c_alpha(double alpha, double* out);
AH_API ah_status ah_kernel_eval(double alpha, double re, double im, double* out);
AH_API ah_status ah_kernel_mass(double alpha, double r, double* out);
AH_API ah_status ah_kernel_laplacian(double alpha, double re, double im,
                                     double* out);
AH_API ah_status ah_subharmonic_radius(double alpha, double* out);
/* Report with columns r,theta,K,lapK,M for n points. */
AH_API ah_status ah_kernel_table(double alpha, const double* re,
                                 const double* im, size_t n, ah_report** out);

/* Boundary data. */
AH_API ah_status ah_boundary_from_json(const char* json, ah_boundary** out);
AH_API ah_status ah_boundary_constant(double re, double im, ah_boundary** out);
/* upper on [θ₀, θ₀+π), lower on [θ₀+π, θ₀+2π). */
AH_API ah_status ah_boundary_step(double theta0, double upper_re,
                                  double upper_im, double lower_re,
                                  double lower_im, ah_boundary** out);
AH_API ah_status ah_boundary_to_json(const ah_boundary* f, char** out);
AH_API ah_status ah_boundary_eval(const ah_boundary* f, double theta,
                                  double* re, double* im);
AH_API ah_status ah_boundary_limits(const ah_boundary* f, double theta,
                                    double* left_re, double* left_im,
                                    double* right_re, double* right_im);
/* Writes up to `capacity` jump points; *count receives the total. */
AH_API ah_status ah_boundary_jumps(const ah_boundary* f, double* points,
                                   size_t capacity, size_t* count);
AH_API void ah_boundary_free(ah_boundary* f);

/* Solver. n_nodes = 0 selects the default quadrature rule. */
AH_API ah_status ah_extend_quadrature(double alpha, const ah_boundary* f,
                                      double re, double im, size_t n_nodes,
                                      double* u_re, double* u_im);
AH_API ah_status ah_dirichlet_solve(double alpha, const ah_boundary* f,
                                    size_t n_samples, ah_series** out);
AH_API ah_status ah_series_eval(const ah_series* s, double re, double im,
                                double* u_re, double* u_im);
AH_API ah_status ah_series_max_index(const ah_series* s, int* out);
AH_API ah_status ah_series_coeff(const ah_series* s, int n, double* re,
                                 double* im);
AH_API void ah_series_free(ah_series* s);
/* α = 0 extension Σ a_n zⁿ + Σ a_{-n} z̄ⁿ of the sampled spectrum of f. */
AH_API ah_status ah_harmonic_companion(const ah_boundary* f, size_t n_samples,
                                       double re, double im, double* u_re,
                                       double* u_im);

/* |T_α u| by central differences (h and h/2, Richardson). `confirmed`
 * (may be NULL) reports whether halving h behaved as expected. */
AH_API ah_status ah_pde_residual_series(const ah_series* s, double re,
                                        double im, double h, double* residual,
                                        int* confirmed);
AH_API ah_status ah_pde_residual_quadrature(double alpha, const ah_boundary* f,
                                            double re, double im, double h,
                                            double* residual, int* confirmed);
AH_API ah_status ah_pde_residual_kernel(double alpha, double re, double im,
                                        double h, double* residual,
                                        int* confirmed);

typedef enum ah_method {
  AH_METHOD_QUADRATURE = 0,
  AH_METHOD_SERIES = 1,
  AH_METHOD_BOTH = 2
} ah_method;

typedef struct ah_grid_options {
  size_t n_r;
  size_t n_theta;
  double r_max;
  ah_method method;
  size_t n_nodes;
  size_t n_samples;
  unsigned threads;
  double threshold; /* max discrepancy accepted with AH_METHOD_BOTH */
} ah_grid_options;

AH_API void ah_grid_options_default(ah_grid_options* options);
AH_API ah_status ah_extend_grid(double alpha, const ah_boundary* f,
                                const ah_grid_options* options,
                                ah_report** out);
/* Same report at n explicit points; the grid fields of options are unused. */
AH_API ah_status ah_extend_points(double alpha, const ah_boundary* f,
                                  const double* re, const double* im, size_t n,
                                  const ah_grid_options* options,
                                  ah_report** out);

/* Analysis. */
AH_API ah_status ah_probe_jump(double alpha, const ah_boundary* f,
                               double theta0, const double* gammas,
                               size_t n_gammas, const double* distances,
                               size_t n_distances, double tolerance,
                               ah_report** out);

typedef struct ah_scan_options {
  size_t grid_n;
  double h;
  double tolerance;
  double epsilon;
  size_t n_nodes;
  unsigned threads;
} ah_scan_options;

AH_API void ah_scan_options_default(ah_scan_options* options);
AH_API ah_status ah_subharmonic_scan(double alpha, const ah_boundary* f,
                                     const ah_scan_options* options,
                                     ah_report** out);
AH_API ah_status ah_kernel_radius_scan(double alpha, size_t samples,
                                       ah_report** out);
AH_API ah_status ah_radius_bracket(double alpha, double* lo, double* hi);
AH_API ah_status ah_hypergeometric_scan(double alpha, size_t grid_n,
                                        double r_max, double h,
                                        double tolerance, ah_report** out);
AH_API ah_status ah_ratio_monotone_check(double alpha, const double* t,
                                         size_t n, ah_report** out);

AH_API ah_status ah_riesz_fejer_constant(double alpha, double p, double* out);
AH_API ah_status ah_g_function(double alpha, double p, double t, double* out);

typedef struct ah_riesz_options {
  double alpha;
  double p;
  double s;
  size_t radial_nodes;
  size_t boundary_nodes;
  size_t n_samples;
  double edge;
} ah_riesz_options;

AH_API void ah_riesz_options_default(ah_riesz_options* options);
AH_API ah_status ah_riesz_fejer_check(const ah_riesz_options* options,
                                      const ah_boundary* f, double* lhs,
                                      double* rhs, double* margin);
AH_API ah_status ah_riesz_fejer_trials(const ah_riesz_options* options,
                                       size_t trials, uint64_t seed,
                                       const double* s_values, size_t n_s,
                                       unsigned threads, ah_report** out);

/* Invariant suites: "all", "specfun", "kernel", "solver" or "analysis". */
AH_API ah_status ah_verify(const char* suite, uint64_t seed, double perturb,
                           unsigned threads, char** json_out, int* passed);

/* Constant real expression such as "pi/4" or "3*pi/2". */
AH_API ah_status ah_parse_angle(const char* text, double* out);

/* Reports. */
/* One-row report with the given kind and columns; passed is set as given. */
AH_API ah_status ah_scalar_report(const char* kind, const char* const* names,
                                  const double* values, size_t n, int passed,
                                  ah_report** out);
AH_API ah_status ah_report_to_json(const ah_report* r, char** out);
AH_API ah_status ah_report_to_csv(const ah_report* r, char** out);
AH_API ah_status ah_report_summary_json(const ah_report* r, char** out);
AH_API int ah_report_passed(const ah_report* r);
AH_API void ah_report_free(ah_report* r);

#ifdef __cplusplus
}
#endif

#endif /* ALPHAHARM_H */
