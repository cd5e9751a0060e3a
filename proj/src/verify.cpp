#include "alphaharm/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>

#include "alphaharm/analysis.hpp"
#include "alphaharm/errors.hpp"
#include "alphaharm/solver.hpp"
#include "alphaharm/specfun.hpp"

namespace alphaharm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Recorder {
 public:
  Recorder(std::string suite, std::uint64_t salt, const VerifyOptions& options,
           std::vector<InvariantResult>& out)
      : suite_(std::move(suite)),
        scale_(1.0 + options.perturb),
        gen_(options.seed * 0x9E3779B97F4A7C15ULL + salt),
        out_(out) {}

  // Scales an implementation-side value by the perturbation factor.
  double impl(double v) const { return v * scale_; }
  Complex impl(Complex v) const { return v * scale_; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53);
  }
  std::uint64_t draw() { return gen_(); }

  void at_most(const std::string& name, double measured, double tol) {
    add(name, measured, tol, Comparison::kAtMost, measured <= tol);
  }
  void at_least(const std::string& name, double measured, double tol) {
    add(name, measured, tol, Comparison::kAtLeast, measured >= tol);
  }
  void above(const std::string& name, double measured, double tol) {
    add(name, measured, tol, Comparison::kAbove, measured > tol);
  }

 private:
  void add(const std::string& name, double measured, double tol, Comparison c,
           bool ok) {
    // NaN never passes.
    out_.push_back({suite_, name, measured, tol, c, ok && !std::isnan(measured)});
  }

  std::string suite_;
  double scale_;
  std::mt19937_64 gen_;
  std::vector<InvariantResult>& out_;
};

BoundaryFunction random_poly(Recorder& rec, int degree) {
  std::vector<TrigTerm> terms;
  for (int n = -degree; n <= degree; ++n) {
    terms.push_back({n, Complex(rec.uniform(-1, 1), rec.uniform(-1, 1))});
  }
  return BoundaryFunction::trig_poly(std::move(terms));
}

Complex random_point(Recorder& rec, double r_max) {
  const double r = r_max * std::sqrt(rec.uniform(0.0, 1.0));
  return std::polar(r, rec.uniform(0.0, kTwoPi));
}

std::string alpha_tag(double a) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, a);
  std::string s(buf, res.ptr);
  std::replace(s.begin(), s.end(), '-', 'm');
  return s;
}

// ---------------------------------------------------------------------------

void specfun_suite(Recorder& rec) {
  {
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double a = rec.uniform(-3, 3);
      const double b = rec.uniform(-3, 3);
      const double c = rec.uniform(0.1, 4);
      worst = std::max(worst, std::fabs(rec.impl(hyp2f1(a, b, c, 0.0)) - 1.0));
    }
    rec.at_most("hyp2f1_zero_argument", worst, 0.0);
  }
  rec.at_most("hyp2f1_two_log_two",
              std::fabs(rec.impl(hyp2f1(1, 1, 2, 0.5)) - 2.0 * std::log(2.0)),
              1e-12);
  rec.at_most("gauss_sum_anchor",
              std::fabs(rec.impl(hyp2f1_at_one(-1, 1, 3)) - 2.0 / 3.0), 1e-13);
  rec.at_most("beta_anchor",
              std::fabs(rec.impl(beta_fn(0.75, 0.25)) - kPi * std::sqrt(2.0)),
              1e-11);
  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double a = rec.uniform(0.2, 3.0);
      const double b = rec.uniform(0.2, 3.0);
      const double c = rec.uniform(0.1, a + b - 0.05);
      const double x = rec.uniform(0.0, 0.9);
      const double direct = rec.impl(hyp2f1(a, b, c, x));
      const double euler = euler_transform(a, b, c, x);
      worst = std::max(worst, std::fabs(direct - euler) / std::fabs(euler));
    }
    rec.at_most("euler_transform_consistency", worst, 1e-10);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 32; ++k) {
      const double a = rec.uniform(-3, 3);
      const double b = rec.uniform(-3, 3);
      const double c = rec.uniform(0.1, 4);
      const double x = rec.uniform(0.0, 0.95);
      const double ab = rec.impl(hyp2f1(a, b, c, x));
      const double ba = hyp2f1(b, a, c, x);
      worst = std::max(worst, std::fabs(ab - ba) / std::max(1.0, std::fabs(ba)));
    }
    rec.at_most("hyp2f1_symmetry", worst, 1e-14);
  }
  {
    double worst = 0.0;
    for (int m = 0; m <= 8; ++m) {
      const double b = rec.uniform(-2, 2);
      const double c = rec.uniform(0.5, 3);
      const double x = rec.uniform(0, 0.99);
      // Horner over the terminating coefficients.
      std::vector<double> coef(m + 1, 1.0);
      for (int k = 1; k <= m; ++k) {
        coef[k] = coef[k - 1] * (-m + k - 1.0) * (b + k - 1.0) /
                  ((c + k - 1.0) * k);
      }
      double horner = 0.0;
      for (int k = m; k >= 0; --k) horner = horner * x + coef[k];
      const double v = rec.impl(hyp2f1(-m, b, c, x));
      worst = std::max(worst, std::fabs(v - horner) / std::max(1.0, std::fabs(horner)));
    }
    rec.at_most("polynomial_truncation", worst, 1e-13);
  }
  {
    // Gap to the Gauss sum shrinks monotonically as x → 1⁻.
    double violations = 0.0;
    for (int k = 0; k < 6; ++k) {
      const double a = rec.uniform(-1.5, 1.5);
      const double b = rec.uniform(-1.5, 1.5);
      const double c = a + b + rec.uniform(2.0, 3.0);
      if (c <= 0.05) continue;
      const double limit = hyp2f1_at_one(a, b, c);
      double previous = std::numeric_limits<double>::infinity();
      for (int e = 2; e <= 6; ++e) {
        const double gap =
            std::fabs(rec.impl(hyp2f1(a, b, c, 1.0 - std::pow(10.0, -e))) - limit);
        if (!(gap < previous)) violations += 1.0;
        previous = gap;
      }
    }
    rec.at_most("near_one_gap_shrinks", violations, 0.0);
  }
  {
    double violations = 0.0;
    for (int k = 0; k < 40; ++k) {
      const double c = rec.uniform(0.1, 3);
      const double a = rec.uniform(-3, c);
      const double b = rec.uniform(-3, c);
      const double dir = a * b <= 0.0 ? -1.0 : 1.0;
      double previous = rec.impl(hyp2f1(a, b, c, 0.0));
      for (int i = 1; i <= 60; ++i) {
        const double v = rec.impl(hyp2f1(a, b, c, 0.99 * i / 60.0));
        if (dir * (v - previous) < -1e-14 * std::fabs(previous)) violations += 1.0;
        previous = v;
      }
    }
    rec.at_most("monotone_in_x", violations, 0.0);
  }
  {
    // Σ a_n xⁿ / Σ b_n xⁿ is non-decreasing when a_n/b_n is, b_n > 0.
    double violations = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<double> b(30), a(30);
      double ratio = rec.uniform(0.0, 1.0);
      for (std::size_t n = 0; n < b.size(); ++n) {
        b[n] = rec.uniform(0.1, 1.0);
        ratio += rec.uniform(0.0, 0.5);
        a[n] = ratio * b[n];
      }
      double previous = -std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 50; ++i) {
        const double x = 0.98 * i / 50.0;
        double num = 0.0, den = 0.0, xn = 1.0;
        for (std::size_t n = 0; n < b.size(); ++n) {
          num += a[n] * xn;
          den += b[n] * xn;
          xn *= x;
        }
        const double q = rec.impl(num) / den;
        if (q < previous - 1e-14 * std::fabs(previous)) violations += 1.0;
        previous = q;
      }
    }
    rec.at_most("series_ratio_monotone", violations, 0.0);
  }
}

// ---------------------------------------------------------------------------

void kernel_suite(Recorder& rec) {
  {
    double lowest = std::numeric_limits<double>::infinity();
    double asym = 0.0;
    for (int k = 0; k < 64; ++k) {
      const Alpha a(rec.uniform(-0.95, 10));
      const double r = rec.uniform(0.0, 0.99);
      const double t = rec.uniform(0.0, kTwoPi);
      const double up = rec.impl(kernel_eval(a, DiskPoint::from_polar(r, t)));
      const double down = kernel_eval(a, DiskPoint::from_polar(r, -t));
      lowest = std::min(lowest, up);
      asym = std::max(asym, std::fabs(up - down) / down);
    }
    rec.above("kernel_positive", lowest, 0.0);
    rec.at_most("kernel_conjugate_symmetry", asym, 1e-14);
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 50; ++i) {
      const double a = -0.9 + (10.0 + 0.9) * (i + 1) / 50.0;
      for (int j = 0; j < 50; ++j) {
        const double r = j / 49.0;
        worst = std::max(worst, rec.impl(kernel_mass(Alpha(a), r)));
      }
    }
    rec.at_most("mass_bound", worst, 1.0 + 1e-12);
  }
  {
    double worst = 0.0;
    for (double a : {-0.9, -0.5, 0.0, 0.5, 2.0, 5.0, 10.0}) {
      worst = std::max(worst, std::fabs(rec.impl(kernel_mass(Alpha(a), 1.0)) - 1.0));
    }
    rec.at_most("mass_at_boundary", worst, 1e-12);
  }
  {
    double worst = 0.0;
    const std::size_t n = 4096;
    for (double a : {-0.9, -0.5, 0.0, 1.5, 4.0, 10.0}) {
      const PoissonKernel K{Alpha(a)};
      for (double r : {0.0, 0.3, 0.6, 0.9}) {
        const double radial = K.radial_factor(r);
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          sum += K.rotated(radial, r, kTwoPi * static_cast<double>(k) / n);
        }
        worst = std::max(worst,
                         std::fabs(sum / n - rec.impl(kernel_mass(Alpha(a), r))));
      }
    }
    rec.at_most("trapezoid_mass", worst, 1e-10);
  }
  {
    double worst = 0.0;
    const double h = 1e-3;
    for (int k = 0; k < 40; ++k) {
      const Alpha a(rec.uniform(-0.9, 6));
      const Complex z = random_point(rec, 0.8);
      auto K = [&](double dx, double dy) {
        return kernel_eval(a, DiskPoint(z.real() + dx, z.imag() + dy));
      };
      auto fd = [&](double s) {
        return (K(s, 0) + K(-s, 0) + K(0, s) + K(0, -s) - 4.0 * K(0, 0)) / (s * s);
      };
      const double lap_fd = (4.0 * fd(0.5 * h) - fd(h)) / 3.0;
      const double lap = rec.impl(kernel_laplacian(a, DiskPoint(z)));
      const double scale = std::fabs(lap_fd);
      const double err = scale > 1e-4 ? std::fabs(lap - lap_fd) / scale
                                      : std::fabs(lap - lap_fd) / 1e-4;
      worst = std::max(worst, err);
    }
    rec.at_most("laplacian_matches_fd", worst, 1e-4);
  }
  {
    double violations = 0.0;
    for (double a : {0.5, 1.0, 3.0, 8.0, -0.2, -0.75}) {
      const Alpha al(a);
      const double r0 = subharmonic_radius(al);
      const double sign = a > 0 ? 1.0 : -1.0;
      for (int i = 0; i <= 40; ++i) {
        const double r = r0 * (1.0 - 1e-6) * i / 40.0;
        if (rec.impl(kernel_laplacian(al, DiskPoint(sign * r, 0))) < 0.0) violations += 1;
      }
      for (int i = 1; i <= 10; ++i) {
        const double r = r0 + 0.05 * (1.0 - r0) * i / 10.0;
        if (!(rec.impl(kernel_laplacian(al, DiskPoint(sign * r, 0))) < 0.0)) violations += 1;
      }
    }
    rec.at_most("laplacian_sign_law", violations, 0.0);
  }
  {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 3.0, 8.0, -0.2, -0.75}) {
      const RadiusBracket b = radius_bracket(Alpha(a));
      worst = std::max(worst, std::fabs(rec.impl(b.midpoint()) -
                                        subharmonic_radius(Alpha(a))));
    }
    rec.at_most("radius_bracket_agreement", worst, 1e-9);
  }
}

// ---------------------------------------------------------------------------

void solver_suite(Recorder& rec) {
  {
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const auto f = BoundaryFunction::trig_poly({{n, Complex(1, 0)}});
      for (int k = 0; k < 20; ++k) {
        const Complex z = random_point(rec, 0.95);
        const Complex u = rec.impl(extend_quadrature(Alpha(0), f, DiskPoint(z)));
        worst = std::max(worst, std::abs(u - std::pow(z, n)));
      }
    }
    rec.at_most("harmonic_reduction", worst, 1e-10);
  }
  for (double a : {-0.5, 0.0, 0.5, 2.0, 5.0}) {
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const auto degree = static_cast<int>(rec.draw() % 11);
      const auto f = random_poly(rec, degree);
      const AlphaHarmonicSeries series = dirichlet_solve(Alpha(a), f, 256);
      for (int k = 0; k < 8; ++k) {
        const Complex z = random_point(rec, 0.9);
        const Complex q = rec.impl(extend_quadrature(Alpha(a), f, DiskPoint(z), 4096));
        worst = std::max(worst, std::abs(q - series(z)));
      }
    }
    rec.at_most("cross_route_alpha_" + alpha_tag(a), worst, 1e-8);
  }
  for (double a : {-0.5, 2.0}) {
    double worst_final = 0.0;
    double increases = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = random_poly(rec, 1 + static_cast<int>(rec.draw() % 4));
      const double t0 = rec.uniform(0.0, kTwoPi);
      double previous = std::numeric_limits<double>::infinity();
      for (double r : {0.9, 0.99, 0.999}) {
        const Complex u =
            rec.impl(extend_quadrature(Alpha(a), f, DiskPoint::from_polar(r, t0)));
        const double err = std::abs(u - f(t0));
        if (!(err < previous)) increases += 1.0;
        previous = err;
      }
      worst_final = std::max(worst_final, previous);
    }
    rec.at_most("boundary_convergence_decreasing_alpha_" + alpha_tag(a),
                increases, 0.0);
    rec.at_most("boundary_convergence_level_alpha_" + alpha_tag(a), worst_final,
                0.01);
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (double a : {-0.5, 0.0, 2.0}) {
      const auto f = random_poly(rec, 4);
      double sup = 0.0;
      for (int k = 0; k < 4096; ++k) sup = std::max(sup, std::abs(f(kTwoPi * k / 4096.0)));
      for (int k = 0; k < 16; ++k) {
        const Complex z = random_point(rec, 0.95);
        const Complex u = rec.impl(extend_quadrature(Alpha(a), f, DiskPoint(z)));
        worst = std::max(worst, std::abs(u) - sup * kernel_mass(Alpha(a), std::abs(z)));
      }
    }
    rec.at_most("boundedness", worst, 1e-8);
  }
  {
    double worst = 0.0;
    const auto f = random_poly(rec, 5);
    const auto g = random_poly(rec, 3);
    const double beta = rec.uniform(-2, 2);
    // βf + g assembled from both term lists.
    std::vector<TrigTerm> sum;
    for (const auto& p : f.pieces()) {
      for (const auto& t : std::get<TrigPolyPayload>(p.payload).terms) {
        sum.push_back({t.n, beta * t.coeff});
      }
    }
    for (const auto& p : g.pieces()) {
      for (const auto& t : std::get<TrigPolyPayload>(p.payload).terms) sum.push_back(t);
    }
    const auto combo = BoundaryFunction::trig_poly(std::move(sum));
    for (double a : {-0.5, 1.0}) {
      for (int k = 0; k < 10; ++k) {
        const DiskPoint z(random_point(rec, 0.9));
        const Complex lhs = rec.impl(extend_quadrature(Alpha(a), combo, z, 2048));
        const Complex rhs = beta * extend_quadrature(Alpha(a), f, z, 2048) +
                            extend_quadrature(Alpha(a), g, z, 2048);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    rec.at_most("linearity", worst, 1e-12);
  }
  {
    double quad = 0.0, series_worst = 0.0, kernel_worst = 0.0;
    const double h = 1e-3;
    for (double a : {-0.5, 0.5, 2.0, 5.0}) {
      const Alpha al(a);
      const auto f = random_poly(rec, 6);
      const AlphaHarmonicSeries series = dirichlet_solve(al, f, 256);
      const PoissonKernel K(al);
      const DiskFunction uq = [&](Complex z) {
        return rec.impl(extend_quadrature(al, f, DiskPoint(z)));
      };
      const DiskFunction us = [&](Complex z) { return rec.impl(series(z)); };
      const DiskFunction uk = [&](Complex z) { return Complex(rec.impl(K(z)), 0.0); };
      for (int k = 0; k < 5; ++k) {
        const DiskPoint z(random_point(rec, 0.7));
        quad = std::max(quad, pde_residual(al, uq, z, h));
        series_worst = std::max(series_worst, pde_residual(al, us, z, h));
        kernel_worst = std::max(kernel_worst, pde_residual(al, uk, z, h));
      }
    }
    rec.at_most("pde_residual_quadrature", quad, 1e-5);
    rec.at_most("pde_residual_series", series_worst, 1e-5);
    rec.at_most("pde_residual_kernel", kernel_worst, 1e-5);
  }
  {
    const auto f = BoundaryFunction::trig_poly({{2, Complex(1, 0)}});
    const AlphaHarmonicSeries s = dirichlet_solve(Alpha(2), f, 256);
    rec.at_most("coefficient_map_anchor", std::abs(rec.impl(s.coeff(2)) - 1.5), 1e-12);
  }
  {
    double round_trip = 0.0, reality = 0.0, parseval = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
      const int N = 1 + static_cast<int>(rec.draw() % 12);
      std::vector<TrigTerm> terms;
      FourierSpectrum truth(N);
      for (int n = -N; n <= N; ++n) {
        const Complex c(rec.uniform(-1, 1), rec.uniform(-1, 1));
        terms.push_back({n, c});
        truth.at(n) = c;
      }
      const auto f = BoundaryFunction::trig_poly(terms);
      const auto samples = sample(f, 2 * N + 2 + trial);
      const FourierSpectrum spec = analyze(samples, N);
      double energy = 0.0, sq = 0.0;
      for (int n = -N; n <= N; ++n) {
        round_trip = std::max(round_trip, std::abs(rec.impl(spec[n]) - truth[n]));
        energy += std::norm(rec.impl(spec[n]));
      }
      for (const Complex& v : samples) sq += std::norm(v);
      parseval = std::max(parseval, std::fabs(sq / samples.size() - energy));

      // Real data: the real part of the same polynomial.
      std::vector<TrigTerm> real_terms;
      for (int n = -N; n <= N; ++n) {
        real_terms.push_back({n, 0.5 * (truth[n] + std::conj(truth[-n]))});
      }
      const auto g = BoundaryFunction::trig_poly(real_terms);
      const FourierSpectrum rs = analyze(sample(g, 4 * N + 4));
      for (int n = 1; n <= rs.max_index(); ++n) {
        reality = std::max(reality, std::abs(rec.impl(rs[-n]) - std::conj(rs[n])));
      }
    }
    rec.at_most("fourier_round_trip", round_trip, 1e-12);
    rec.at_most("fourier_reality", reality, 1e-13);
    rec.at_most("fourier_parseval", parseval, 1e-10);
  }
}

// ---------------------------------------------------------------------------

void analysis_suite(Recorder& rec, unsigned threads) {
  const double theta0 = rec.uniform(0.0, kTwoPi);
  const auto step = BoundaryFunction::step(theta0, 1.0, 0.0);
  for (double a : {-0.5, 0.0, 1.0, 3.0}) {
    double worst = 0.0;
    double harmonic = 0.0;
    for (double g : {kPi / 6, kPi / 4, kPi / 2, 3 * kPi / 4}) {
      JumpProbeSpec spec;
      spec.theta0 = theta0;
      spec.gamma = g;
      const JumpProbeResult r = jump_probe(Alpha(a), step, spec);
      const double err = std::abs(rec.impl(r.limit) - r.predicted);
      worst = std::max(worst, err);
      if (a == 0.0) {
        harmonic = std::max(harmonic, err);
        for (const ProbeSample& s : r.samples) {
          harmonic = std::max(harmonic,
                              std::abs(rec.impl(s.u) -
                                       harmonic_piecewise_constant(step, s.z)));
        }
      }
    }
    rec.at_most("jump_law_alpha_" + alpha_tag(a), worst, 0.02);
    if (a == 0.0) rec.at_most("jump_orientation_harmonic", harmonic, 0.005);
  }
  {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 3.0, 8.0, -0.2, -0.75}) {
      worst = std::max(worst, std::fabs(rec.impl(radius_bracket(Alpha(a)).midpoint()) -
                                        subharmonic_radius(Alpha(a))));
    }
    rec.at_most("radius_agreement", worst, 1e-9);
  }
  {
    double lowest = std::numeric_limits<double>::infinity();
    for (double a : {1.0, 2.0, 4.0}) {
      const Report r = hypergeometric_subharmonic_scan(Alpha(a), 12);
      lowest = std::min(lowest, rec.impl(r.summary["min_laplacian"].get<double>()));
    }
    rec.at_least("hypergeometric_subharmonic", lowest, -1e-8);
  }
  {
    double worst = 0.0;
    double violations = 0.0;
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(i / 20.0);
    grid.push_back(0.99);
    grid.push_back(0.999);
    for (double a : {1.0, 2.0, 4.0}) {
      const Report r = ratio_monotone_check(Alpha(a), grid);
      worst = std::max(worst, std::fabs(rec.impl(r.summary["limit_at_one"].get<double>()) -
                                        0.25 * a));
      if (!r.summary["monotone"].get<bool>()) violations += 1.0;
      if (!r.summary["bounded"].get<bool>()) violations += 1.0;
    }
    rec.at_most("ratio_limit", worst, 1e-9);
    rec.at_most("ratio_monotone", violations, 0.0);
  }
  {
    double worst = 0.0;
    for (double p : {1.5, 2.0, 3.0, 8.0}) {
      const double expect = 0.5 * std::pow(1.0 / std::cos(kPi / (2.0 * p)), p);
      worst = std::max(worst, std::fabs(rec.impl(riesz_fejer_constant(Alpha(0), p)) - expect));
    }
    rec.at_most("constant_reduction", worst, 1e-12);
  }
  {
    const double g0 = rec.impl(g_function(Alpha(0), 2, 0));
    rec.at_most("g_closed_form", std::fabs(g0 - kPi * std::sqrt(2.0) / 2.0), 1e-9);
    double endpoints = 0.0;
    double convexity = std::numeric_limits<double>::infinity();
    for (auto [a, p] : {std::pair{0.0, 2.0}, {-0.25, 2.0}, {-0.4, 3.0}, {0.5, 1.5}}) {
      const int M = 24;
      std::vector<double> G(M + 1);
      for (int i = 0; i <= M; ++i) G[i] = rec.impl(g_function(Alpha(a), p, kPi * i / M));
      endpoints = std::max(endpoints, std::fabs(G[0] - G[M]));
      for (int i = 1; i < M; ++i) convexity = std::min(convexity, G[i - 1] - 2 * G[i] + G[i + 1]);
    }
    rec.at_most("g_endpoint_symmetry", endpoints, 1e-9);
    rec.at_least("g_convexity", convexity, -1e-8);
  }
  for (auto [a, p] : {std::pair{-0.25, 2.0}, {-0.4, 3.0}, {0.0, 2.0}}) {
    RieszFejerSpec spec;
    spec.alpha = a;
    spec.p = p;
    TrialOptions opts;
    opts.trials = 20;
    opts.seed = rec.draw() % 1000000;
    opts.s_values = {0.0, kPi / 3};
    opts.threads = threads;
    const Report rep = riesz_fejer_trials(spec, opts);
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& row : rep.rows) {
      lowest = std::min(lowest, row[4] - rec.impl(row[3]));  // rhs - lhs
    }
    rec.at_least("riesz_fejer_margin_alpha_" + alpha_tag(a) + "_p_" + alpha_tag(p),
                 lowest, -1e-8);
  }
}

const char* comparison_text(Comparison c) {
  switch (c) {
    case Comparison::kAtMost: return "<=";
    case Comparison::kAtLeast: return ">=";
    case Comparison::kAbove: return ">";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"specfun", "kernel", "solver",
                                              "analysis"};
  return names;
}

bool VerifySummary::passed() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.passed; });
}

nlohmann::json VerifySummary::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& r : invariants) {
    nlohmann::json item{{"suite", r.suite},
                        {"name", r.name},
                        {"tolerance", r.tolerance},
                        {"comparison", comparison_text(r.comparison)},
                        {"passed", r.passed}};
    item["measured"] = std::isfinite(r.measured) ? nlohmann::json(r.measured)
                                                 : nlohmann::json(nullptr);
    list.push_back(std::move(item));
    if (!r.passed) failed.push_back(r.suite + "." + r.name);
  }
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"kind", "verify"},
                        {"suite", options.suite},
                        {"seed", options.seed},
                        {"perturb", options.perturb},
                        {"invariants", std::move(list)},
                        {"failed", std::move(failed)},
                        {"passed", passed()}};
}

std::string VerifySummary::to_json_text() const { return to_json().dump(2) + "\n"; }

VerifySummary run_verify(const VerifyOptions& options) {
  const auto& names = verify_suites();
  if (options.suite != "all" &&
      std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw ArgumentError("unknown verify suite '" + options.suite + "'");
  }
  VerifySummary summary;
  summary.options = options;
  auto wanted = [&](const char* name) {
    return options.suite == "all" || options.suite == name;
  };
  if (wanted("specfun")) {
    Recorder rec("specfun", 1, options, summary.invariants);
    specfun_suite(rec);
  }
  if (wanted("kernel")) {
    Recorder rec("kernel", 2, options, summary.invariants);
    kernel_suite(rec);
  }
  if (wanted("solver")) {
    Recorder rec("solver", 3, options, summary.invariants);
    solver_suite(rec);
  }
  if (wanted("analysis")) {
    Recorder rec("analysis", 4, options, summary.invariants);
    analysis_suite(rec, options.threads);
  }
  return summary;
}

}  // namespace alphaharm
