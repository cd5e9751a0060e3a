#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "alphaharm/analysis.hpp"
#include "alphaharm/errors.hpp"
#include "alphaharm/solver.hpp"
#include "alphaharm/specfun.hpp"

using namespace alphaharm;
constexpr double kPi = std::numbers::pi;

namespace {

double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(g() >> 11) * 0x1.0p-53;
}

Complex random_point(std::mt19937_64& g, double r_max) {
  return std::polar(r_max * std::sqrt(uniform(g, 0, 1)), uniform(g, -kPi, kPi));
}

}  // namespace

TEST_CASE("alpha = 0 reproduces z^n and conj(z)^n") {
  std::mt19937_64 gen(1);
  for (int n = -8; n <= 8; ++n) {
    const BoundaryFunction f = BoundaryFunction::trig_poly({{n, {1, 0}}});
    for (int k = 0; k < 20; ++k) {
      const Complex z = random_point(gen, 0.95);
      const Complex want = n >= 0 ? std::pow(z, n) : std::pow(std::conj(z), -n);
      CHECK(std::abs(extend_quadrature(Alpha(0), f, DiskPoint(z)) - want) < 1e-10);
    }
  }
}

TEST_CASE("constant data extend to the kernel mass") {
  const BoundaryFunction one = BoundaryFunction::constant({1, 0});
  for (double alpha : {-0.5, 0.0, 2.0, 5.0}) {
    for (double r : {0.0, 0.5, 0.9}) {
      const Complex u = extend_quadrature(Alpha(alpha), one, DiskPoint(r, 0));
      CHECK(std::abs(u - kernel_mass(Alpha(alpha), r)) < 1e-12);
    }
  }
  const Complex u0 = extend_quadrature(Alpha(2), one, DiskPoint(0, 0));
  CHECK(u0.real() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("coefficient map divides by F(-a/2, n-a/2; n+1; 1)") {
  FourierSpectrum spec(3);
  spec.at(2) = {1, 0};
  spec.at(-3) = {0, 2};
  const Alpha a(1.5);
  const AlphaHarmonicSeries s = coefficient_map(a, spec);
  CHECK(std::abs(s.coeff(2) - 1.0 / hyp2f1_at_one(-0.75, 2 - 0.75, 3)) < 1e-14);
  CHECK(std::abs(s.coeff(-3) - Complex(0, 2) / hyp2f1_at_one(-0.75, 3 - 0.75, 4)) <
        1e-14);
  // α = 0 leaves the coefficients alone.
  CHECK(coefficient_map(Alpha(0), spec).coeff(2) == Complex(1, 0));
}

TEST_CASE("quadrature and series routes agree on trig data") {
  std::mt19937_64 gen(4);
  for (double alpha : {-0.5, 0.0, 0.5, 2.0, 5.0}) {
    for (int trial = 0; trial < 3; ++trial) {
      const BoundaryFunction f = random_trig_poly(100 + trial, 10);
      const AlphaHarmonicSeries s = dirichlet_solve(Alpha(alpha), f, 256);
      for (int k = 0; k < 10; ++k) {
        const DiskPoint z(random_point(gen, 0.9));
        CHECK(std::abs(extend_quadrature(Alpha(alpha), f, z) - extend_series(s, z)) <
              1e-8);
      }
    }
  }
}

TEST_CASE("panel rule matches the trapezoid rule on smooth data") {
  const BoundaryFunction f = random_trig_poly(9, 5);
  for (double r : {0.2, 0.9, 0.99}) {
    const DiskPoint z = DiskPoint::from_polar(r, 1.3);
    CHECK(std::abs(extend_panels(Alpha(1.5), f, z) -
                   extend_quadrature(Alpha(1.5), f, z, 8192)) < 1e-9);
  }
}

TEST_CASE("the extension is linear in the data") {
  const BoundaryFunction f = BoundaryFunction::expression("cos(2*t)");
  const BoundaryFunction g = BoundaryFunction::expression("exp(sin(t))");
  const BoundaryFunction h =
      BoundaryFunction::expression("(0.3 - 1.2*i)*exp(sin(t)) + cos(2*t)");
  const Complex c(0.3, -1.2);
  const DiskPoint z(0.4, 0.3);
  const Alpha a(0.7);
  const Complex combined =
      c * extend_quadrature(a, g, z) + extend_quadrature(a, f, z);
  CHECK(std::abs(extend_quadrature(a, h, z) - combined) < 1e-13);
}

TEST_CASE("the extension is bounded by sup |f|") {
  const BoundaryFunction f = BoundaryFunction::expression("exp(i*3*t)*cos(t)");
  std::mt19937_64 gen(8);
  for (double alpha : {-0.7, 0.0, 3.0}) {
    for (int k = 0; k < 30; ++k) {
      const DiskPoint z(random_point(gen, 0.99));
      CHECK(std::abs(extend_quadrature(Alpha(alpha), f, z)) <= 1 + 1e-12);
    }
  }
}

TEST_CASE("PDE residuals are small for both routes and the kernel") {
  std::mt19937_64 gen(5);
  const BoundaryFunction f = random_trig_poly(3, 6);
  for (double alpha : {-0.5, 1.0, 4.0}) {
    const Alpha a(alpha);
    const AlphaHarmonicSeries s = dirichlet_solve(a, f, 128);
    const PoissonKernel k(a);
    for (int i = 0; i < 5; ++i) {
      const DiskPoint z(random_point(gen, 0.7));
      const auto series = pde_residual_report(a, [&](Complex w) { return s(w); }, z, 1e-3);
      const auto quad = pde_residual_report(
          a, [&](Complex w) { return extend_quadrature(a, f, DiskPoint(w)); }, z, 1e-3);
      const auto kern = pde_residual_report(
          a, [&](Complex w) { return Complex(k(w), 0); }, z, 1e-3);
      CHECK(series.residual <= 1e-5);
      CHECK(quad.residual <= 1e-5);
      CHECK(kern.residual <= 1e-5);
      CHECK(series.confirmed);
    }
  }
}

TEST_CASE("a function that is not alpha-harmonic has a large residual") {
  const Alpha a(2);
  const double res = pde_residual(a, [](Complex w) { return w * w * std::conj(w); },
                                  DiskPoint(0.3, 0.2), 1e-3);
  CHECK(res > 1e-2);
}

TEST_CASE("argument validation") {
  const BoundaryFunction f = BoundaryFunction::constant({1, 0});
  CHECK_THROWS_AS(extend_quadrature(Alpha(1), f, DiskPoint(1, 0)), DomainError);
  CHECK_THROWS_AS(extend_quadrature(Alpha(1), f, DiskPoint(0.1, 0), 8), ArgumentError);
  CHECK_THROWS_AS(pde_residual(Alpha(1), [](Complex) { return Complex{}; },
                               DiskPoint(0.999, 0), 1e-3),
                  DomainError);
  CHECK_THROWS_AS(pde_residual(Alpha(1), [](Complex) { return Complex{}; },
                               DiskPoint(0.1, 0), 0.0),
                  DomainError);
  GridOptions o;
  o.grid.r_max = 1.0;
  CHECK_THROWS_AS(evaluate_grid(Alpha(1), f, o), DomainError);
  o.grid.r_max = 0.5;
  o.grid.n_theta = 0;
  CHECK_THROWS_AS(evaluate_grid(Alpha(1), f, o), ArgumentError);
}

TEST_CASE("grid layout and thread-count independence") {
  const BoundaryFunction f = random_trig_poly(12, 5);
  GridOptions o;
  o.grid = {4, 6, 0.75};
  o.method = ExtendMethod::kBoth;
  const auto one = evaluate_grid(Alpha(1), f, o);
  o.threads = 4;
  const auto four = evaluate_grid(Alpha(1), f, o);
  REQUIRE(one.size() == 24);
  CHECK(std::abs(one[0].z) == 0.0);
  CHECK(std::abs(one[23].z) == doctest::Approx(0.75));
  CHECK(std::arg(one[7].z) == doctest::Approx(kPi / 3));
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].u == four[i].u);
    CHECK(one[i].discrepancy < 1e-10);
  }
}

TEST_CASE("harmonic companion of sampled data") {
  const BoundaryFunction f = BoundaryFunction::trig_poly({{2, {1, 0}}, {-1, {0, 1}}});
  const FourierSpectrum spec = analyze(sample(f, 32));
  const Complex z(0.2, 0.5);
  CHECK(std::abs(harmonic_companion(spec, DiskPoint(z)) -
                 (z * z + Complex(0, 1) * std::conj(z))) < 1e-14);
}

TEST_CASE("dirichlet_solve trims the spectrum") {
  const BoundaryFunction f = BoundaryFunction::trig_poly({{3, {1, 0}}});
  CHECK(dirichlet_solve(Alpha(1), f, 256).max_index() == 3);
}
