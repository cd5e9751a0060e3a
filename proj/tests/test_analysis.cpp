#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "alphaharm/analysis.hpp"
#include "alphaharm/errors.hpp"
#include "alphaharm/solver.hpp"
#include "alphaharm/specfun.hpp"

using namespace alphaharm;
constexpr double kPi = std::numbers::pi;

namespace {

BoundaryFunction step_data() { return BoundaryFunction::step(0.0, {1, 0}, {0, 0}); }

JumpProbeSpec probe(double gamma) {
  JumpProbeSpec s;
  s.theta0 = 0.0;
  s.gamma = gamma;
  return s;
}

}  // namespace

TEST_CASE("harmonic jump law at alpha = 0") {
  for (double gamma : {kPi / 6, kPi / 4, kPi / 2, 3 * kPi / 4}) {
    const JumpProbeResult r = jump_probe(Alpha(0), step_data(), probe(gamma));
    CHECK(r.upper == Complex(1, 0));
    CHECK(r.lower == Complex(0, 0));
    CHECK(r.predicted.real() == doctest::Approx(1 - gamma / kPi));
    CHECK(r.error < 0.005);
    REQUIRE(r.harmonic_deviation.has_value());
    CHECK(*r.harmonic_deviation < 1e-10);
  }
}

TEST_CASE("probe limits follow the kernel scaling weight for alpha != 0") {
  for (double alpha : {-0.5, 1.0, 3.0}) {
    for (double gamma : {kPi / 4, kPi / 2}) {
      const JumpProbeResult r = jump_probe(Alpha(alpha), step_data(), probe(gamma));
      CHECK(std::abs(r.limit - r.scaling_predicted) < 0.02);
    }
  }
}

TEST_CASE("scaling weight closed forms") {
  for (double g : {0.3, 1.0, 2.5}) {
    CHECK(jump_scaling_weight(Alpha(0), g) == doctest::Approx(1 - g / kPi).epsilon(1e-12));
    CHECK(jump_scaling_weight(Alpha(1), g) ==
          doctest::Approx((1 + std::cos(g)) / 2).epsilon(1e-10));
    CHECK(jump_scaling_weight(Alpha(3.7), kPi - g) ==
          doctest::Approx(1 - jump_scaling_weight(Alpha(3.7), g)).epsilon(1e-10));
  }
  CHECK(jump_scaling_weight(Alpha(2.2), kPi / 2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("closed-form harmonic measure equals the quadrature extension") {
  const BoundaryFunction f = BoundaryFunction::from_json_text(R"js({"pieces":[
    {"theta_start":0,"theta_end":1,"kind":"const","payload":2},
    {"theta_start":1,"theta_end":4,"kind":"const","payload":[0,-1]},
    {"theta_start":4,"theta_end":"2*pi","kind":"const","payload":0.5}]})js");
  for (Complex z : {Complex(0, 0), Complex(0.5, 0.2), Complex(-0.7, -0.6)}) {
    CHECK(std::abs(harmonic_piecewise_constant(f, z) -
                   extend_quadrature(Alpha(0), f, DiskPoint(z))) < 1e-10);
  }
  CHECK_THROWS_AS(harmonic_piecewise_constant(BoundaryFunction::expression("t"), 0.0),
                  ArgumentError);
}

TEST_CASE("probe argument validation") {
  const BoundaryFunction f = step_data();
  JumpProbeSpec s = probe(kPi / 2);
  s.theta0 = 1.0;
  CHECK_THROWS_AS(jump_probe(Alpha(0), f, s), ArgumentError);
  CHECK_THROWS_AS(jump_probe(Alpha(0), f, probe(0.0)), ArgumentError);
  CHECK_THROWS_AS(jump_probe(Alpha(0), f, probe(kPi)), ArgumentError);
  s = probe(kPi / 2);
  s.distances = {0.01, 0.1};
  CHECK_THROWS_AS(jump_probe(Alpha(0), f, s), ArgumentError);
  // At γ = 0.01 the segment leaves the disk once d >= 2 sin γ.
  s = probe(0.01);
  s.distances = {0.1, 0.01};
  CHECK_THROWS_AS(jump_probe(Alpha(0), f, s), ArgumentError);
}

TEST_CASE("continuity points approach the boundary value") {
  const BoundaryFunction f = random_trig_poly(5, 4);
  JumpProbeSpec s = probe(kPi / 3);
  s.theta0 = 2.0;
  for (double alpha : {0.0, 2.0}) {
    const JumpProbeResult r = approach_probe(Alpha(alpha), f, s);
    CHECK(r.upper == r.lower);
    CHECK(std::abs(r.limit - f(2.0)) < 0.02);
  }
}

TEST_CASE("radius bracket matches the closed form") {
  for (double alpha : {0.5, 1.0, 3.0, 8.0, -0.2, -0.75}) {
    const RadiusBracket b = radius_bracket(Alpha(alpha));
    const double r0 = subharmonic_radius(Alpha(alpha));
    CHECK(b.hi - b.lo <= 1e-10);
    CHECK(std::abs(b.midpoint() - r0) < 1e-9);
  }
  CHECK_THROWS_AS(radius_bracket(Alpha(0)), ArgumentError);
}

TEST_CASE("kernel radius scan reports") {
  const Report r3 = kernel_radius_scan(Alpha(3));
  CHECK(r3.passed);
  CHECK(r3.summary["bracket"]["midpoint"].get<double>() ==
        doctest::Approx(1.0 / 3).epsilon(1e-9));
  const Report r0 = kernel_radius_scan(Alpha(0));
  CHECK(r0.summary["all_nonnegative"].get<bool>());
  CHECK(r0.summary["subharmonic_radius"].get<double>() == 1.0);
}

TEST_CASE("subharmonic scan of nonnegative data") {
  ScanOptions o;
  o.grid_n = 8;
  const BoundaryFunction f = BoundaryFunction::expression("1 + cos(t)");
  const Report r = subharmonic_scan(Alpha(3), f, o);
  CHECK(r.passed);
  CHECK(r.summary["violations"].get<int>() == 0);
  CHECK_THROWS_AS(subharmonic_scan(Alpha(3), BoundaryFunction::expression("cos(t)"), o),
                  PreconditionError);
  CHECK_THROWS_AS(subharmonic_scan(Alpha(3), BoundaryFunction::expression("1 + i*cos(t)"), o),
                  PreconditionError);
}

TEST_CASE("hypergeometric profile is subharmonic and the ratio is monotone") {
  for (double alpha : {1.0, 2.0, 4.0}) {
    CHECK(hypergeometric_subharmonic_scan(Alpha(alpha)).passed);
    std::vector<double> t;
    for (int k = 1; k < 100; ++k) t.push_back(k / 100.0);
    const Report r = ratio_monotone_check(Alpha(alpha), t);
    CHECK(r.passed);
    CHECK(r.summary["limit_at_one"].get<double>() ==
          doctest::Approx(alpha / 4).epsilon(1e-9));
  }
  CHECK_THROWS_AS(ratio_monotone_check(Alpha(-0.5), {0.5}), ArgumentError);
  CHECK_THROWS_AS(ratio_monotone_check(Alpha(1), {0.5, 0.4}), ArgumentError);
}

TEST_CASE("Riesz-Fejer constant") {
  for (double p : {1.5, 2.0, 3.0, 8.0}) {
    const double want = 0.5 * std::pow(1 / std::cos(kPi / (2 * p)), p);
    CHECK(std::abs(riesz_fejer_constant(Alpha(0), p) - want) < 1e-12);
  }
  CHECK(std::abs(riesz_fejer_constant(Alpha(0), 2) - 1) < 1e-12);
  const double alpha = -0.3, p = 2.5;
  const double want = std::pow(2, alpha - 1) * c_alpha(Alpha(alpha)) / kPi *
                      boost::math::beta((1 + alpha + 1 / p) / 2, (1 - 1 / p) / 2) *
                      std::pow(1 / std::cos(kPi / (2 * p)), p - 1);
  CHECK(riesz_fejer_constant(Alpha(alpha), p) == doctest::Approx(want).epsilon(1e-12));
  CHECK_THROWS_AS(require_riesz_fejer_hypotheses(0.5, 2), DomainError);
  CHECK_THROWS_AS(require_riesz_fejer_hypotheses(-0.5, 1), DomainError);
  CHECK_THROWS_AS(require_riesz_fejer_hypotheses(-0.9, 3), DomainError);
  CHECK_NOTHROW(require_riesz_fejer_hypotheses(-0.9, 2));
}

TEST_CASE("G agrees with Boost tanh-sinh and is convex") {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double alpha : {0.0, -0.25, -0.4}) {
    for (double p : {2.0, 3.0}) {
      const double q = alpha + 1 / p, e = alpha + 2 / p;
      for (double t : {0.0, 0.7, 2.0, kPi}) {
        // xc is the signed distance to the nearer endpoint, so sin x, cos x
        // and sin(x + t/2) = sin(π/2 - x + (π - t)/2) stay accurate where the
        // integrand is singular.
        auto f = [&](double x, double xc) {
          const double dl = xc < 0 ? -xc : x;
          const double dr = xc > 0 ? xc : kPi / 2 - x;
          const double den = x < kPi / 4 ? std::sin(dl + t / 2) : std::sin(dr + (kPi - t) / 2);
          return std::pow(std::sin(dl) * std::sin(dr), q) / std::pow(den, e);
        };
        const double want = ts.integrate(f, 0.0, kPi / 2, 1e-14);
        CHECK(std::abs(g_function(Alpha(alpha), p, t) - want) < 1e-8);
      }
      CHECK(std::abs(g_function(Alpha(alpha), p, 0) - g_function(Alpha(alpha), p, kPi)) <
            1e-9);
      const int n = 64;
      const double h = kPi / n;
      for (int k = 1; k < n; ++k) {
        const double d2 = g_function(Alpha(alpha), p, (k - 1) * h) -
                          2 * g_function(Alpha(alpha), p, k * h) +
                          g_function(Alpha(alpha), p, (k + 1) * h);
        CHECK(d2 >= -1e-8);
      }
    }
  }
  CHECK(g_function(Alpha(0), 2, 0) == doctest::Approx(kPi * std::sqrt(2.0) / 2).epsilon(1e-10));
}

TEST_CASE("Riesz-Fejer inequality on seeded trials") {
  RieszFejerSpec spec;
  spec.alpha = -0.25;
  spec.p = 2;
  TrialOptions o;
  o.trials = 5;
  o.s_values = {0.0, 1.0};
  const Report a = riesz_fejer_trials(spec, o);
  CHECK(a.passed);
  CHECK(a.rows.size() == 10);
  o.threads = 3;
  const Report b = riesz_fejer_trials(spec, o);
  CHECK(a.to_json_text() == b.to_json_text());
}

TEST_CASE("Riesz-Fejer check is exact enough for constant data at alpha = 0") {
  // u = 1 on the diameter, so lhs = 2 and rhs = C(0,2)·2π.
  RieszFejerSpec spec;
  const RieszFejerResult r = riesz_fejer_check(spec, BoundaryFunction::constant({1, 0}));
  CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.rhs == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(r.margin == doctest::Approx(r.rhs - r.lhs));
}
