#include "alphaharm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace alphaharm {
namespace {

GaussLegendreRule build_rule(std::size_t order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double n = static_cast<double>(order);
  for (std::size_t i = 0; i < (order + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= order; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t order) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b,
                           double tolerance, int max_levels) {
  const double half = 0.5 * (b - a);
  const double half_pi = 0.5 * std::numbers::pi;
  // τ range beyond which weights underflow relative to double precision.
  constexpr double kTauMax = 4.0;

  QuadratureResult result;
  auto node_sum = [&](double tau) {
    const double u = half_pi * std::sinh(tau);
    const double cu = std::cosh(u);
    const double weight = half * half_pi * std::cosh(tau) / (cu * cu);
    // Distances to the endpoints: (b-a)/(1+e^{∓2u}).
    const double left = (b - a) / (1.0 + std::exp(-2.0 * u));
    const double right = (b - a) / (1.0 + std::exp(2.0 * u));
    if (!(left > 0.0) || !(right > 0.0)) return 0.0;
    const double x = u < 0.0 ? a + left : b - right;
    ++result.evaluations;
    const double v = f(x, left, right);
    return std::isfinite(v) ? weight * v : 0.0;
  };

  double h = 1.0;
  double sum = node_sum(0.0);
  for (double tau = h; tau <= kTauMax; tau += h) {
    sum += node_sum(tau) + node_sum(-tau);
  }
  double estimate = h * sum;
  double previous = estimate;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    // Only the odd multiples of the new step are new nodes.
    for (double tau = h; tau <= kTauMax; tau += 2.0 * h) {
      sum += node_sum(tau) + node_sum(-tau);
    }
    estimate = h * sum;
    result.error_estimate = std::fabs(estimate - previous);
    if (level >= 3 && result.error_estimate <= tolerance) break;
    previous = estimate;
  }
  result.value = estimate;
  return result;
}

}  // namespace alphaharm
