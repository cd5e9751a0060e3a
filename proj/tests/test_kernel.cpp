#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/trapezoidal.hpp>

#include "alphaharm/errors.hpp"
#include "alphaharm/kernel.hpp"
#include "alphaharm/specfun.hpp"

using namespace alphaharm;
constexpr double kPi = std::numbers::pi;

namespace {

double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Five-point FD Laplacian of K_α at step h.
double fd_laplacian(Alpha a, Complex z, double h) {
  const PoissonKernel k(a);
  return (k(z + h) + k(z - h) + k(z + Complex(0, h)) + k(z - Complex(0, h)) -
          4 * k(z)) /
         (h * h);
}

}  // namespace

TEST_CASE("Alpha and DiskPoint validate their domains") {
  CHECK_THROWS_AS(Alpha(-1.0), DomainError);
  CHECK_THROWS_AS(Alpha(-1.5), DomainError);
  CHECK_THROWS_AS(Alpha(std::nan("")), DomainError);
  CHECK_NOTHROW(Alpha(-0.999));
  CHECK_THROWS_AS(DiskPoint(1.0, 0.1), DomainError);
  CHECK_THROWS_AS(DiskPoint(std::nan(""), 0.0), DomainError);
  CHECK(DiskPoint(1.0, 0.0).is_interior() == false);
  CHECK_THROWS_AS(kernel_eval(Alpha(1), DiskPoint(0.0, 1.0)), DomainError);
}

TEST_CASE("c_alpha anchors") {
  CHECK(c_alpha(Alpha(0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c_alpha(Alpha(2)) == doctest::Approx(0.5).epsilon(1e-15));
  // α = 1: Γ(3/2)² / Γ(2) = π/4.
  CHECK(c_alpha(Alpha(1)) == doctest::Approx(kPi / 4).epsilon(1e-14));
}

TEST_CASE("kernel closed-form values") {
  CHECK(kernel_eval(Alpha(0), DiskPoint(0.5, 0)) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(kernel_eval(Alpha(2), DiskPoint(0, 0)) == doctest::Approx(0.5).epsilon(1e-15));
  // α = 0 reduces to the classical Poisson kernel.
  const Complex z(0.3, -0.6);
  const double poisson = (1 - std::norm(z)) / std::norm(1.0 - z);
  CHECK(kernel_eval(Alpha(0), DiskPoint(z)) == doctest::Approx(poisson).epsilon(1e-14));
}

TEST_CASE("kernel is positive and conjugate symmetric") {
  std::mt19937_64 gen(1);
  for (int k = 0; k < 200; ++k) {
    const Alpha a(uniform(gen, -0.95, 8));
    const double r = uniform(gen, 0, 0.999), t = uniform(gen, -kPi, kPi);
    const DiskPoint z = DiskPoint::from_polar(r, t);
    const double v = kernel_eval(a, z);
    CHECK(v > 0);
    CHECK(kernel_eval(a, DiskPoint(std::conj(z.value()))) ==
          doctest::Approx(v).epsilon(1e-14));
  }
}

TEST_CASE("kernel mass equals the circle average (Boost trapezoid oracle)") {
  for (double alpha : {-0.9, -0.5, 0.0, 0.5, 2.0, 5.0, 10.0}) {
    const Alpha a(alpha);
    const PoissonKernel k(a);
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
      auto f = [&](double t) { return k(std::polar(r, t)); };
      const double avg =
          boost::math::quadrature::trapezoidal(f, 0.0, 2 * kPi, 1e-14) / (2 * kPi);
      CHECK(std::abs(kernel_mass(a, r) - avg) < 1e-10);
    }
    CHECK(std::abs(kernel_mass(a, 1.0) - 1.0) < 1e-12);
  }
}

TEST_CASE("kernel mass never exceeds one") {
  for (int i = 0; i < 50; ++i) {
    const Alpha a(-0.9 + (10.9) * (i + 1) / 50.0);
    for (int j = 0; j < 50; ++j) {
      CHECK(kernel_mass(a, j / 49.0) <= 1 + 1e-12);
    }
  }
  CHECK_THROWS_AS(kernel_mass(Alpha(1), 1.1), DomainError);
  CHECK_THROWS_AS(kernel_mass(Alpha(1), -0.1), DomainError);
}

TEST_CASE("closed-form Laplacian matches finite differences") {
  std::mt19937_64 gen(2);
  for (int k = 0; k < 100; ++k) {
    const Alpha a(uniform(gen, -0.9, 6));
    const Complex z = std::polar(uniform(gen, 0, 0.8), uniform(gen, -kPi, kPi));
    const double exact = kernel_laplacian(a, DiskPoint(z));
    const double h = 1e-3;
    const double rich = (4 * fd_laplacian(a, z, h / 2) - fd_laplacian(a, z, h)) / 3;
    CHECK(std::abs(exact - rich) <= 1e-6 * std::max(1.0, std::abs(exact)));
  }
  CHECK(kernel_laplacian(Alpha(0), DiskPoint(0.4, 0.2)) == 0.0);
}

TEST_CASE("subharmonic radius closed forms") {
  CHECK(subharmonic_radius(Alpha(3)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(subharmonic_radius(Alpha(-0.75)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(subharmonic_radius(Alpha(8)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(subharmonic_radius(Alpha(0)) == 1.0);
}

TEST_CASE("Laplacian sign changes at the subharmonic radius") {
  for (double alpha : {0.5, 1.0, 3.0, 8.0}) {
    const double r0 = subharmonic_radius(Alpha(alpha));
    CHECK(kernel_laplacian(Alpha(alpha), DiskPoint(r0 * 0.99, 0)) > 0);
    CHECK(kernel_laplacian(Alpha(alpha), DiskPoint(r0 * 1.01, 0)) < 0);
  }
  for (double alpha : {-0.2, -0.75}) {
    const double r0 = subharmonic_radius(Alpha(alpha));
    CHECK(kernel_laplacian(Alpha(alpha), DiskPoint(-r0 * 0.99, 0)) > 0);
    CHECK(kernel_laplacian(Alpha(alpha), DiskPoint(-r0 * 1.01, 0)) < 0);
  }
}

TEST_CASE("rotated form agrees with direct evaluation") {
  const Alpha a(1.7);
  const PoissonKernel k(a);
  const double r = 0.63, theta = 0.4, t = 2.1;
  const double direct = k(std::polar(r, theta) * std::polar(1.0, -t));
  CHECK(k.rotated(k.radial_factor(r), r, theta - t) ==
        doctest::Approx(direct).epsilon(1e-14));
}
