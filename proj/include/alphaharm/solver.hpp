#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "alphaharm/boundary.hpp"
#include "alphaharm/kernel.hpp"

namespace alphaharm {

// Truncated α-harmonic expansion
//   u(z) = Σ_{n>=0} c_n F_n(|z|²) zⁿ + Σ_{n>0} c_{-n} F_n(|z|²) z̄ⁿ,
//   F_n(x) = F(-α/2, n-α/2; n+1; x).
class AlphaHarmonicSeries {
 public:
  AlphaHarmonicSeries(Alpha alpha, FourierSpectrum coeffs);

  Alpha alpha() const noexcept { return alpha_; }
  int max_index() const noexcept { return coeffs_.max_index(); }
  Complex coeff(int n) const { return coeffs_[n]; }
  const FourierSpectrum& coefficients() const noexcept { return coeffs_; }

  // Evaluates the finite sum; no domain checks (|z| < 1 assumed).
  Complex operator()(Complex z) const;

 private:
  Alpha alpha_;
  FourierSpectrum coeffs_;
};

using DiskFunction = std::function<Complex(Complex)>;

// max(1024, ceil(64/(1-r))).
std::size_t default_quadrature_nodes(double r);

// Periodic trapezoid rule for (1/2π)∫ K_α(z e^{-it}) f(e^{it}) dt on n_nodes
// uniform nodes. A node that lands on a jump point takes the mean of the
// one-sided limits. Requires |z| < 1 and n_nodes >= 16.
Complex extend_quadrature(Alpha alpha, const BoundaryFunction& f, DiskPoint z,
                          std::size_t n_nodes);

// Default quadrature route: the trapezoid rule with default_quadrature_nodes
// for data without jumps; extend_panels otherwise.
Complex extend_quadrature(Alpha alpha, const BoundaryFunction& f, DiskPoint z);

// Arc-by-arc composite Gauss–Legendre, panels graded geometrically around
// arg z at the kernel width 1-|z|. Exact arc endpoints, so one-sided limits
// are honoured at jumps.
Complex extend_panels(Alpha alpha, const BoundaryFunction& f, DiskPoint z);

// c_n = a_n / F(-α/2, |n|-α/2; |n|+1; 1).
AlphaHarmonicSeries coefficient_map(Alpha alpha, const FourierSpectrum& spec);

// Requires |z| < 1.
Complex extend_series(const AlphaHarmonicSeries& series, DiskPoint z);

// Samples, analyses and maps f. The support is trimmed to the largest |n|
// with |a_n| > 1e-13·max|a|, capped at floor(n_samples/2) - 1.
AlphaHarmonicSeries dirichlet_solve(Alpha alpha, const BoundaryFunction& f,
                                    std::size_t n_samples);

// Σ a_n zⁿ + Σ a_{-n} z̄ⁿ. Requires |z| < 1.
Complex harmonic_companion(const FourierSpectrum& spec, DiskPoint z);

struct ResidualReport {
  double residual_h = 0.0;       // |T_α u| with step h
  double residual_half = 0.0;    // |T_α u| with step h/2
  double extrapolated = 0.0;     // |(4 T(h/2) - T(h)) / 3|
  // The extrapolated value; what pde_residual returns.
  double residual = 0.0;
  // Halving h did not make the extrapolation worse than the finer raw
  // estimate, i.e. the stencil is in its asymptotic regime.
  bool confirmed = false;
};

// Central-difference evaluation of T_α u at z with a Richardson check on
// steps h and h/2. Requires |z| + 2h < 1 and h > 0.
ResidualReport pde_residual_report(Alpha alpha, const DiskFunction& u,
                                   DiskPoint z, double h);
double pde_residual(Alpha alpha, const DiskFunction& u, DiskPoint z, double h);

enum class ExtendMethod { kQuadrature, kSeries, kBoth };

struct GridSpec {
  std::size_t n_r = 8;
  std::size_t n_theta = 16;
  double r_max = 0.9;
};

struct GridOptions {
  GridSpec grid;
  ExtendMethod method = ExtendMethod::kQuadrature;
  std::size_t n_nodes = 0;     // 0 selects the default node rule
  std::size_t n_samples = 256;
  unsigned threads = 1;
};

struct GridPoint {
  Complex z;
  Complex u;
  double discrepancy = 0.0;  // |quadrature - series| for kBoth, else 0
};

// Polar grid r_i = r_max·i/(n_r-1), θ_j = 2πj/n_theta, row-major in (i, j).
std::vector<Complex> grid_points(const GridSpec& grid);

// Extension at explicit interior points; options.grid is ignored.
std::vector<GridPoint> evaluate_points(Alpha alpha, const BoundaryFunction& f,
                                       const std::vector<Complex>& points,
                                       const GridOptions& options);

std::vector<GridPoint> evaluate_grid(Alpha alpha, const BoundaryFunction& f,
                                     const GridOptions& options);

}  // namespace alphaharm
