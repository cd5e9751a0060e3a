#include "alphaharm/alphaharm.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alphaharm/analysis.hpp"
#include "alphaharm/boundary.hpp"
#include "alphaharm/errors.hpp"
#include "alphaharm/kernel.hpp"
#include "alphaharm/report.hpp"
#include "alphaharm/solver.hpp"
#include "alphaharm/specfun.hpp"
#include "alphaharm/tables.hpp"
#include "alphaharm/verify.hpp"

struct ah_boundary {
  alphaharm::BoundaryFunction f;
};

struct ah_series {
  alphaharm::AlphaHarmonicSeries s;
};

struct ah_report {
  alphaharm::Report r;
};

namespace {

namespace ah = alphaharm;

thread_local std::string g_last_error;

ah_status fail(ah_status status, const char* what) {
  g_last_error = what;
  return status;
}

ah_status map_kind(ah::ErrorKind kind) {
  switch (kind) {
    case ah::ErrorKind::kDomain: return AH_ERR_DOMAIN;
    case ah::ErrorKind::kArgument: return AH_ERR_ARGUMENT;
    case ah::ErrorKind::kAccuracy: return AH_ERR_ACCURACY;
    case ah::ErrorKind::kPrecondition: return AH_ERR_PRECONDITION;
    case ah::ErrorKind::kParse: return AH_ERR_PARSE;
  }
  return AH_ERR_INTERNAL;
}

// Runs body, translating every exception into a status code.
template <typename Body>
ah_status guard(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return AH_OK;
  } catch (const ah::Error& e) {
    return fail(map_kind(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(AH_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AH_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

template <typename... Ptrs>
bool any_null(Ptrs... ptrs) {
  return ((ptrs == nullptr) || ...);
}

#define AH_REQUIRE(...)                                            \
  do {                                                             \
    if (any_null(__VA_ARGS__))                                     \
      return fail(AH_ERR_NULL, "required pointer argument is NULL"); \
  } while (0)

void put(double* out, double v) { *out = v; }

void put_complex(double* re, double* im, ah::Complex v) {
  if (re) *re = v.real();
  if (im) *im = v.imag();
}

std::vector<double> to_vector(const double* p, size_t n) {
  return p ? std::vector<double>(p, p + n) : std::vector<double>{};
}

ah::ExtendMethod to_method(ah_method m) {
  switch (m) {
    case AH_METHOD_QUADRATURE: return ah::ExtendMethod::kQuadrature;
    case AH_METHOD_SERIES: return ah::ExtendMethod::kSeries;
    case AH_METHOD_BOTH: return ah::ExtendMethod::kBoth;
  }
  throw ah::ArgumentError("unknown extension method");
}

ah::GridOptions to_grid(const ah_grid_options& options) {
  ah::GridOptions o;
  o.grid.n_r = options.n_r;
  o.grid.n_theta = options.n_theta;
  o.grid.r_max = options.r_max;
  o.method = to_method(options.method);
  o.n_nodes = options.n_nodes;
  o.n_samples = options.n_samples;
  o.threads = options.threads;
  return o;
}

ah::RieszFejerSpec to_spec(const ah_riesz_options& o) {
  ah::RieszFejerSpec spec;
  spec.alpha = o.alpha;
  spec.p = o.p;
  spec.s = o.s;
  spec.radial_nodes = o.radial_nodes;
  spec.boundary_nodes = o.boundary_nodes;
  spec.n_samples = o.n_samples;
  spec.edge = o.edge;
  return spec;
}

void put_residual(const ah::ResidualReport& rep, double* residual,
                  int* confirmed) {
  *residual = rep.residual;
  if (confirmed) *confirmed = rep.confirmed ? 1 : 0;
}

}  // namespace

extern "C" {

const char* ah_version(void) { return "1.0.0"; }

const char* ah_last_error(void) { return g_last_error.c_str(); }

const char* ah_status_name(ah_status status) {
  switch (status) {
    case AH_OK: return "ok";
    case AH_ERR_DOMAIN: return "domain error";
    case AH_ERR_ARGUMENT: return "argument error";
    case AH_ERR_ACCURACY: return "accuracy error";
    case AH_ERR_PRECONDITION: return "precondition error";
    case AH_ERR_PARSE: return "parse error";
    case AH_ERR_IO: return "io error";
    case AH_ERR_INTERNAL: return "internal error";
    case AH_ERR_NULL: return "null argument";
  }
  return "unknown status";
}

void ah_string_free(char* s) { std::free(s); }

ah_status ah_gamma(double x, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::gamma_fn(x)); });
}

ah_status ah_log_gamma(double x, double* out, int* sign) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::log_gamma(x, sign)); });
}

ah_status ah_beta(double p, double q, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::beta_fn(p, q)); });
}

ah_status ah_hyp2f1(double a, double b, double c, double x, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::hyp2f1(a, b, c, x)); });
}

ah_status ah_hyp2f1_at_one(double a, double b, double c, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::hyp2f1_at_one(a, b, c)); });
}

ah_status ah_hyp2f1_derivative(double a, double b, double c, double x,
                               double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::hyp2f1_derivative(a, b, c, x)); });
}

ah_status ah_euler_transform(double a, double b, double c, double x,
                             double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::euler_transform(a, b, c, x)); });
}

ah_status ah_c_alpha(double alpha, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::c_alpha(ah::Alpha(alpha))); });
}

ah_status ah_kernel_eval(double alpha, double re, double im, double* out) {
  AH_REQUIRE(out);
  return guard([&] {
    put(out, ah::kernel_eval(ah::Alpha(alpha), ah::DiskPoint(re, im)));
  });
}

ah_status ah_kernel_mass(double alpha, double r, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::kernel_mass(ah::Alpha(alpha), r)); });
}

ah_status ah_kernel_laplacian(double alpha, double re, double im,
                              double* out) {
  AH_REQUIRE(out);
  return guard([&] {
    put(out, ah::kernel_laplacian(ah::Alpha(alpha), ah::DiskPoint(re, im)));
  });
}

ah_status ah_subharmonic_radius(double alpha, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::subharmonic_radius(ah::Alpha(alpha))); });
}

ah_status ah_kernel_table(double alpha, const double* re, const double* im,
                          size_t n, ah_report** out) {
  AH_REQUIRE(out);
  if (n > 0) AH_REQUIRE(re, im);
  return guard([&] {
    std::vector<ah::Complex> points;
    points.reserve(n);
    for (size_t i = 0; i < n; ++i) points.emplace_back(re[i], im[i]);
    *out = new ah_report{ah::kernel_table(ah::Alpha(alpha), points)};
  });
}

ah_status ah_boundary_from_json(const char* json, ah_boundary** out) {
  AH_REQUIRE(json, out);
  return guard([&] {
    *out = new ah_boundary{ah::BoundaryFunction::from_json_text(json)};
  });
}

ah_status ah_boundary_constant(double re, double im, ah_boundary** out) {
  AH_REQUIRE(out);
  return guard([&] {
    *out = new ah_boundary{ah::BoundaryFunction::constant({re, im})};
  });
}

ah_status ah_boundary_step(double theta0, double upper_re, double upper_im,
                           double lower_re, double lower_im,
                           ah_boundary** out) {
  AH_REQUIRE(out);
  return guard([&] {
    *out = new ah_boundary{ah::BoundaryFunction::step(
        theta0, {upper_re, upper_im}, {lower_re, lower_im})};
  });
}

ah_status ah_boundary_to_json(const ah_boundary* f, char** out) {
  AH_REQUIRE(f, out);
  return guard([&] { *out = copy_string(f->f.dump()); });
}

ah_status ah_boundary_eval(const ah_boundary* f, double theta, double* re,
                           double* im) {
  AH_REQUIRE(f);
  return guard([&] { put_complex(re, im, f->f(theta)); });
}

ah_status ah_boundary_limits(const ah_boundary* f, double theta,
                             double* left_re, double* left_im,
                             double* right_re, double* right_im) {
  AH_REQUIRE(f);
  return guard([&] {
    put_complex(left_re, left_im, f->f.left_limit(theta));
    put_complex(right_re, right_im, f->f.right_limit(theta));
  });
}

ah_status ah_boundary_jumps(const ah_boundary* f, double* points,
                            size_t capacity, size_t* count) {
  AH_REQUIRE(f, count);
  if (capacity > 0) AH_REQUIRE(points);
  return guard([&] {
    const auto& jumps = f->f.jump_points();
    *count = jumps.size();
    for (size_t i = 0; i < jumps.size() && i < capacity; ++i)
      points[i] = jumps[i];
  });
}

void ah_boundary_free(ah_boundary* f) { delete f; }

ah_status ah_extend_quadrature(double alpha, const ah_boundary* f, double re,
                               double im, size_t n_nodes, double* u_re,
                               double* u_im) {
  AH_REQUIRE(f);
  return guard([&] {
    const ah::Alpha a(alpha);
    const ah::DiskPoint z(re, im);
    const ah::Complex u = n_nodes == 0
                              ? ah::extend_quadrature(a, f->f, z)
                              : ah::extend_quadrature(a, f->f, z, n_nodes);
    put_complex(u_re, u_im, u);
  });
}

ah_status ah_dirichlet_solve(double alpha, const ah_boundary* f,
                             size_t n_samples, ah_series** out) {
  AH_REQUIRE(f, out);
  return guard([&] {
    *out = new ah_series{ah::dirichlet_solve(ah::Alpha(alpha), f->f, n_samples)};
  });
}

ah_status ah_series_eval(const ah_series* s, double re, double im,
                         double* u_re, double* u_im) {
  AH_REQUIRE(s);
  return guard([&] {
    put_complex(u_re, u_im, ah::extend_series(s->s, ah::DiskPoint(re, im)));
  });
}

ah_status ah_series_max_index(const ah_series* s, int* out) {
  AH_REQUIRE(s, out);
  *out = s->s.max_index();
  return AH_OK;
}

ah_status ah_series_coeff(const ah_series* s, int n, double* re, double* im) {
  AH_REQUIRE(s);
  return guard([&] { put_complex(re, im, s->s.coeff(n)); });
}

void ah_series_free(ah_series* s) { delete s; }

ah_status ah_harmonic_companion(const ah_boundary* f, size_t n_samples,
                                double re, double im, double* u_re,
                                double* u_im) {
  AH_REQUIRE(f);
  return guard([&] {
    const ah::FourierSpectrum spec = ah::analyze(ah::sample(f->f, n_samples));
    put_complex(u_re, u_im,
                ah::harmonic_companion(spec, ah::DiskPoint(re, im)));
  });
}

ah_status ah_pde_residual_series(const ah_series* s, double re, double im,
                                 double h, double* residual, int* confirmed) {
  AH_REQUIRE(s, residual);
  return guard([&] {
    const ah::AlphaHarmonicSeries& series = s->s;
    put_residual(ah::pde_residual_report(
                     series.alpha(),
                     [&series](ah::Complex z) { return series(z); },
                     ah::DiskPoint(re, im), h),
                 residual, confirmed);
  });
}

ah_status ah_pde_residual_quadrature(double alpha, const ah_boundary* f,
                                     double re, double im, double h,
                                     double* residual, int* confirmed) {
  AH_REQUIRE(f, residual);
  return guard([&] {
    const ah::Alpha a(alpha);
    const ah::BoundaryFunction& data = f->f;
    put_residual(ah::pde_residual_report(
                     a,
                     [&](ah::Complex z) {
                       return ah::extend_quadrature(a, data, ah::DiskPoint(z));
                     },
                     ah::DiskPoint(re, im), h),
                 residual, confirmed);
  });
}

ah_status ah_pde_residual_kernel(double alpha, double re, double im, double h,
                                 double* residual, int* confirmed) {
  AH_REQUIRE(residual);
  return guard([&] {
    const ah::Alpha a(alpha);
    const ah::PoissonKernel k(a);
    put_residual(ah::pde_residual_report(
                     a, [&k](ah::Complex z) { return ah::Complex(k(z), 0.0); },
                     ah::DiskPoint(re, im), h),
                 residual, confirmed);
  });
}

void ah_grid_options_default(ah_grid_options* options) {
  if (!options) return;
  const ah::GridOptions d;
  options->n_r = d.grid.n_r;
  options->n_theta = d.grid.n_theta;
  options->r_max = d.grid.r_max;
  options->method = AH_METHOD_QUADRATURE;
  options->n_nodes = d.n_nodes;
  options->n_samples = d.n_samples;
  options->threads = d.threads;
  options->threshold = 1e-8;
}

ah_status ah_extend_grid(double alpha, const ah_boundary* f,
                         const ah_grid_options* options, ah_report** out) {
  AH_REQUIRE(f, options, out);
  return guard([&] {
    *out = new ah_report{ah::grid_report(ah::Alpha(alpha), f->f,
                                         to_grid(*options), options->threshold)};
  });
}

ah_status ah_extend_points(double alpha, const ah_boundary* f,
                           const double* re, const double* im, size_t n,
                           const ah_grid_options* options, ah_report** out) {
  AH_REQUIRE(f, options, out);
  if (n > 0) AH_REQUIRE(re, im);
  return guard([&] {
    std::vector<ah::Complex> points;
    points.reserve(n);
    for (size_t i = 0; i < n; ++i) points.emplace_back(re[i], im[i]);
    *out = new ah_report{ah::points_report(ah::Alpha(alpha), f->f, points,
                                           to_grid(*options),
                                           options->threshold)};
  });
}

ah_status ah_probe_jump(double alpha, const ah_boundary* f, double theta0,
                        const double* gammas, size_t n_gammas,
                        const double* distances, size_t n_distances,
                        double tolerance, ah_report** out) {
  AH_REQUIRE(f, gammas, out);
  if (n_distances > 0) AH_REQUIRE(distances);
  return guard([&] {
    const std::vector<double> d = n_distances == 0
                                      ? ah::JumpProbeSpec{}.distances
                                      : to_vector(distances, n_distances);
    *out = new ah_report{ah::jump_probe_report(
        ah::Alpha(alpha), f->f, theta0, to_vector(gammas, n_gammas), d,
        tolerance)};
  });
}

void ah_scan_options_default(ah_scan_options* options) {
  if (!options) return;
  const ah::ScanOptions d;
  options->grid_n = d.grid_n;
  options->h = d.h;
  options->tolerance = d.tolerance;
  options->epsilon = d.epsilon;
  options->n_nodes = d.n_nodes;
  options->threads = d.threads;
}

ah_status ah_subharmonic_scan(double alpha, const ah_boundary* f,
                              const ah_scan_options* options,
                              ah_report** out) {
  AH_REQUIRE(f, options, out);
  return guard([&] {
    ah::ScanOptions o;
    o.grid_n = options->grid_n;
    o.h = options->h;
    o.tolerance = options->tolerance;
    o.epsilon = options->epsilon;
    o.n_nodes = options->n_nodes;
    o.threads = options->threads;
    *out = new ah_report{ah::subharmonic_scan(ah::Alpha(alpha), f->f, o)};
  });
}

ah_status ah_kernel_radius_scan(double alpha, size_t samples,
                                ah_report** out) {
  AH_REQUIRE(out);
  return guard([&] {
    *out = new ah_report{ah::kernel_radius_scan(ah::Alpha(alpha), samples)};
  });
}

ah_status ah_radius_bracket(double alpha, double* lo, double* hi) {
  AH_REQUIRE(lo, hi);
  return guard([&] {
    const ah::RadiusBracket b = ah::radius_bracket(ah::Alpha(alpha));
    *lo = b.lo;
    *hi = b.hi;
  });
}

ah_status ah_hypergeometric_scan(double alpha, size_t grid_n, double r_max,
                                 double h, double tolerance, ah_report** out) {
  AH_REQUIRE(out);
  return guard([&] {
    *out = new ah_report{ah::hypergeometric_subharmonic_scan(
        ah::Alpha(alpha), grid_n, r_max, h, tolerance)};
  });
}

ah_status ah_ratio_monotone_check(double alpha, const double* t, size_t n,
                                  ah_report** out) {
  AH_REQUIRE(out);
  if (n > 0) AH_REQUIRE(t);
  return guard([&] {
    *out = new ah_report{
        ah::ratio_monotone_check(ah::Alpha(alpha), to_vector(t, n))};
  });
}

ah_status ah_riesz_fejer_constant(double alpha, double p, double* out) {
  AH_REQUIRE(out);
  return guard([&] {
    ah::require_riesz_fejer_hypotheses(alpha, p);
    put(out, ah::riesz_fejer_constant(ah::Alpha(alpha), p));
  });
}

ah_status ah_g_function(double alpha, double p, double t, double* out) {
  AH_REQUIRE(out);
  return guard([&] { put(out, ah::g_function(ah::Alpha(alpha), p, t)); });
}

void ah_riesz_options_default(ah_riesz_options* options) {
  if (!options) return;
  const ah::RieszFejerSpec d;
  options->alpha = d.alpha;
  options->p = d.p;
  options->s = d.s;
  options->radial_nodes = d.radial_nodes;
  options->boundary_nodes = d.boundary_nodes;
  options->n_samples = d.n_samples;
  options->edge = d.edge;
}

ah_status ah_riesz_fejer_check(const ah_riesz_options* options,
                               const ah_boundary* f, double* lhs, double* rhs,
                               double* margin) {
  AH_REQUIRE(options, f);
  return guard([&] {
    const ah::RieszFejerResult r = ah::riesz_fejer_check(to_spec(*options), f->f);
    if (lhs) *lhs = r.lhs;
    if (rhs) *rhs = r.rhs;
    if (margin) *margin = r.margin;
  });
}

ah_status ah_riesz_fejer_trials(const ah_riesz_options* options, size_t trials,
                                uint64_t seed, const double* s_values,
                                size_t n_s, unsigned threads,
                                ah_report** out) {
  AH_REQUIRE(options, out);
  if (n_s > 0) AH_REQUIRE(s_values);
  return guard([&] {
    ah::TrialOptions t;
    t.trials = trials;
    t.seed = seed;
    if (n_s > 0) t.s_values = to_vector(s_values, n_s);
    t.threads = threads;
    *out = new ah_report{ah::riesz_fejer_trials(to_spec(*options), t)};
  });
}

ah_status ah_verify(const char* suite, uint64_t seed, double perturb,
                    unsigned threads, char** json_out, int* passed) {
  AH_REQUIRE(suite);
  return guard([&] {
    ah::VerifyOptions o;
    o.suite = suite;
    o.seed = seed;
    o.perturb = perturb;
    o.threads = threads;
    const ah::VerifySummary summary = ah::run_verify(o);
    if (passed) *passed = summary.passed() ? 1 : 0;
    if (json_out) *json_out = copy_string(summary.to_json_text());
  });
}

ah_status ah_parse_angle(const char* text, double* out) {
  AH_REQUIRE(text, out);
  return guard([&] { *out = ah::Angle::parse(text).value; });
}

ah_status ah_scalar_report(const char* kind, const char* const* names,
                           const double* values, size_t n, int passed,
                           ah_report** out) {
  AH_REQUIRE(kind, out);
  if (n > 0) AH_REQUIRE(names, values);
  for (size_t i = 0; i < n; ++i) AH_REQUIRE(names[i]);
  return guard([&] {
    ah::Report rep;
    rep.kind = kind;
    rep.columns.assign(names, names + n);
    rep.add_row(to_vector(values, n));
    rep.passed = passed != 0;
    *out = new ah_report{std::move(rep)};
  });
}

ah_status ah_report_to_json(const ah_report* r, char** out) {
  AH_REQUIRE(r, out);
  return guard([&] { *out = copy_string(r->r.to_json_text()); });
}

ah_status ah_report_to_csv(const ah_report* r, char** out) {
  AH_REQUIRE(r, out);
  return guard([&] { *out = copy_string(r->r.to_csv()); });
}

ah_status ah_report_summary_json(const ah_report* r, char** out) {
  AH_REQUIRE(r, out);
  return guard([&] { *out = copy_string(r->r.summary.dump(2) + "\n"); });
}

int ah_report_passed(const ah_report* r) { return r && r->r.passed ? 1 : 0; }

void ah_report_free(ah_report* r) { delete r; }

}  // extern "C"
