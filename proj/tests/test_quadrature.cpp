#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "alphaharm/quadrature.hpp"

using namespace alphaharm;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  for (std::size_t n : {1u, 2u, 5u, 20u, 64u}) {
    const auto& rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // ∫x^{2n-2} = 2/(2n-1).
    const int deg = static_cast<int>(2 * n - 2);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s += rule.weights[i] * std::pow(rule.nodes[i], deg);
    }
    CHECK(s == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-13));
  }
}

TEST_CASE("Gauss-Legendre cache returns a stable reference") {
  CHECK(&gauss_legendre(12) == &gauss_legendre(12));
}

TEST_CASE("tanh-sinh handles endpoint singularities like Boost") {
  // ∫_0^1 x^{-1/2}(1-x)^{-1/3} dx = B(1/2, 2/3).
  auto mine = [](double, double dl, double dr) {
    return std::pow(dl, -0.5) * std::pow(dr, -1.0 / 3);
  };
  const QuadratureResult got = tanh_sinh(mine, 0.0, 1.0, 1e-12, 10);
  boost::math::quadrature::tanh_sinh<double> ts;
  // Boost passes xc = a - x near a (negative) and b - x near b (positive).
  auto ref_f = [](double x, double xc) {
    const double dl = xc < 0 ? -xc : x;
    const double dr = xc > 0 ? xc : 1 - x;
    return std::pow(dl, -0.5) * std::pow(dr, -1.0 / 3);
  };
  const double ref = ts.integrate(ref_f, 0.0, 1.0);
  CHECK(std::abs(got.value - ref) < 1e-9);
  CHECK(got.evaluations > 0);
}

TEST_CASE("tanh-sinh on a smooth integrand") {
  auto f = [](double x, double, double) { return std::exp(x); };
  const QuadratureResult r = tanh_sinh(f, -1.0, 2.0);
  CHECK(r.value == doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-13));
}
