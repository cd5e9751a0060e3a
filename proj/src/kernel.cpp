#include "alphaharm/kernel.hpp"

#include <cmath>

#include "alphaharm/errors.hpp"
#include "alphaharm/specfun.hpp"

namespace alphaharm {
namespace {

void require_interior(DiskPoint z, const char* where) {
  if (!z.is_interior()) {
    throw DomainError(std::string(where) + ": requires |z| < 1");
  }
}

}  // namespace

Alpha::Alpha(double alpha) : value_(alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a finite real > -1");
  }
}

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("DiskPoint: non-finite coordinates");
  }
  if (std::norm(z) > 1.0) {
    throw DomainError("DiskPoint: |z| > 1");
  }
}

DiskPoint DiskPoint::from_polar(double r, double theta) {
  return DiskPoint(std::polar(r, theta));
}

double c_alpha(Alpha alpha) {
  const double a = alpha.value();
  if (a == 0.0) return 1.0;
  const double g = gamma_fn(0.5 * a + 1.0);
  return g * g / gamma_fn(1.0 + a);
}

PoissonKernel::PoissonKernel(Alpha alpha)
    : alpha_(alpha), c_alpha_(c_alpha(alpha)) {}

double PoissonKernel::operator()(Complex z) const {
  const double a = alpha_.value();
  const double one_minus_r2 = 1.0 - std::norm(z);
  const double dist2 = std::norm(1.0 - z);
  return c_alpha_ * std::pow(one_minus_r2, a + 1.0) *
         std::pow(dist2, -0.5 * a - 1.0);
}

double PoissonKernel::laplacian(Complex z) const {
  const double a = alpha_.value();
  if (a == 0.0) return 0.0;
  const double r2 = std::norm(z);
  const double one_minus_r2 = 1.0 - r2;
  const double bracket = a + 4.0 * (a + 1.0) * r2 / one_minus_r2 -
                         2.0 * (a + 2.0) * (z / (1.0 - z)).real();
  return a * bracket * (*this)(z) / one_minus_r2;
}

double PoissonKernel::radial_factor(double r) const {
  return c_alpha_ * std::pow(1.0 - r * r, alpha_.value() + 1.0);
}

double PoissonKernel::rotated(double radial_factor, double r,
                              double angle_diff) const {
  // 1 + r² - 2r cos φ = (1-r)² + 4r sin²(φ/2), cancellation-free near φ = 0.
  const double s = std::sin(0.5 * angle_diff);
  const double d2 = (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;
  return radial_factor * std::pow(d2, -0.5 * alpha_.value() - 1.0);
}

double kernel_eval(Alpha alpha, DiskPoint z) {
  require_interior(z, "kernel_eval");
  return PoissonKernel(alpha)(z.value());
}

double kernel_mass(Alpha alpha, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("kernel_mass: r must lie in [0, 1]");
  }
  const double a = alpha.value();
  if (r == 1.0) {
    // c_α · Γ(1)Γ(1+α)/Γ(1+α/2)², which is identically 1.
    return c_alpha(alpha) * hyp2f1_at_one(-0.5 * a, -0.5 * a, 1.0);
  }
  return c_alpha(alpha) * hyp2f1(-0.5 * a, -0.5 * a, 1.0, r * r);
}

double kernel_laplacian(Alpha alpha, DiskPoint z) {
  require_interior(z, "kernel_laplacian");
  return PoissonKernel(alpha).laplacian(z.value());
}

double subharmonic_radius(Alpha alpha) {
  const double a = alpha.value();
  const double s = std::sqrt(1.0 + a);
  if (a > 0.0) return (s - 1.0) / (s + 1.0);
  if (a == 0.0) return 1.0;
  return (1.0 - s) / (s + 1.0);
}

}  // namespace alphaharm
