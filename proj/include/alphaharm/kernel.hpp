#pragma once

#include <complex>

namespace alphaharm {

using Complex = std::complex<double>;

// The PDE parameter α, restricted to the non-trivial regime α > -1.
class Alpha {
 public:
  // Throws DomainError unless alpha > -1.
  explicit Alpha(double alpha);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

// A point of the closed unit disk. Interior-only operations check
// is_interior() themselves.
class DiskPoint {
 public:
  // Throws DomainError for |z| > 1 or non-finite coordinates.
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  static DiskPoint from_polar(double r, double theta);

  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  Complex value() const noexcept { return z_; }
  double modulus() const noexcept { return std::abs(z_); }
  double arg() const noexcept { return std::arg(z_); }
  bool is_interior() const noexcept { return std::norm(z_) < 1.0; }

 private:
  Complex z_;
};

// c_α = Γ(α/2+1)² / Γ(1+α).
double c_alpha(Alpha alpha);

// K_α(z) = c_α (1-|z|²)^{α+1} / |1-z|^{α+2}, |z| < 1.
double kernel_eval(Alpha alpha, DiskPoint z);

// Circle average of K_α at radius r: c_α F(-α/2,-α/2;1;r²). M_α(1) = 1.
double kernel_mass(Alpha alpha, double r);

// ΔK_α(z) from the closed-form bracket
//   α(α + 4(α+1)r²/(1-r²) - 2(α+2)Re(z/(1-z))) K_α(z) / (1-r²).
double kernel_laplacian(Alpha alpha, DiskPoint z);

// Radius r0 below which every extension of nonnegative data is subharmonic.
double subharmonic_radius(Alpha alpha);

// K_α with c_α computed once; used by the quadrature loops.
class PoissonKernel {
 public:
  explicit PoissonKernel(Alpha alpha);

  Alpha alpha() const noexcept { return alpha_; }
  double normalization() const noexcept { return c_alpha_; }

  // No domain checks; callers guarantee |z| < 1.
  double operator()(Complex z) const;
  double laplacian(Complex z) const;

  // K_α(z e^{-it}) written through r = |z|, θ = arg z:
  //   c_α (1-r²)^{α+1} / (1 + r² - 2r cos(θ-t))^{α/2+1}.
  // `radial_factor` is c_α(1-r²)^{α+1}, hoisted out of the node loop.
  double rotated(double radial_factor, double r, double angle_diff) const;
  double radial_factor(double r) const;

 private:
  Alpha alpha_;
  double c_alpha_;
};

}  // namespace alphaharm
