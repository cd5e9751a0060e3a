#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace alphaharm {

// Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Computed by Newton iteration on P_n; cached per order, thread-safe.
const GaussLegendreRule& gauss_legendre(std::size_t order);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Integrand for tanh-sinh: f(x, x - a, b - x). The two distances are
// computed without cancellation so endpoint singularities such as
// (x - a)^{-1/2} can be evaluated accurately.
using EndpointIntegrand = std::function<double(double, double, double)>;

// Double-exponential (tanh-sinh) quadrature on [a, b]. Halves the step
// until successive levels agree to `tolerance` (absolute) or max_levels.
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b,
                           double tolerance = 1e-13, int max_levels = 8);

}  // namespace alphaharm
