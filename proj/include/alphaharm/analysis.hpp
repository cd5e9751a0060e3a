#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "alphaharm/boundary.hpp"
#include "alphaharm/kernel.hpp"
#include "alphaharm/report.hpp"

namespace alphaharm {

// ---------------------------------------------------------------------------
// Approach to a jump point.

// Approach segment z(d) = e^{iθ₀} + d·e^{i(θ₀ + π/2 + γ)}: γ is measured from
// the positively oriented tangent (increasing θ) toward the interior, so
// γ = π/2 is the inward radius and small γ hugs the arc θ > θ₀.
struct JumpProbeSpec {
  double theta0 = 0.0;
  double gamma = 0.0;
  std::vector<double> distances{0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001};
};

struct ProbeSample {
  double distance;
  Complex z;
  Complex u;
};

struct JumpProbeResult {
  std::vector<ProbeSample> samples;
  Complex upper;      // M, limit from θ₀⁺
  Complex lower;      // m, limit from θ₀⁻
  Complex predicted;  // (γ/π)m + (1 - γ/π)M
  // Weighted average with weight jump_scaling_weight(α, γ) on M: the value
  // forced by the boundary blow-up of K_α. Equal to `predicted` at α = 0.
  Complex scaling_predicted;
  Complex limit;      // Richardson extrapolation of the two smallest distances
  double exponent;    // assumed convergence order in d
  double error;       // |limit - predicted|
  // α = 0 with piecewise-constant data only: the largest deviation of the
  // sampled values from the closed-form harmonic-measure sum.
  std::optional<double> harmonic_deviation;
};

// Throws ArgumentError if θ₀ is not a jump point of f, if γ ∉ (0, π), if the
// distances are not strictly decreasing values in (0, 1), or if any probe
// point falls outside the open disk.
JumpProbeResult jump_probe(Alpha alpha, const BoundaryFunction& f,
                           const JumpProbeSpec& spec);

// Same probe without the jump requirement; at a continuity point M = m and
// every prediction collapses to f(e^{iθ₀}).
JumpProbeResult approach_probe(Alpha alpha, const BoundaryFunction& f,
                               const JumpProbeSpec& spec);

// W_α(γ) = ∫_{γ-π/2}^{π/2} cos^α φ dφ / ∫_{-π/2}^{π/2} cos^α φ dφ. Near a
// boundary point K_α looks like y^{α+1}/|x+iy|^{α+2}, so a segment at angle
// γ sees the arc θ > θ₀ with this weight. W_0(γ) = 1 - γ/π.
double jump_scaling_weight(Alpha alpha, double gamma);

// Poisson integral of piecewise-constant data in closed form:
// Σ_k v_k ω_k(z), ω_(a,b)(z) = arg((e^{ib}-z)/(e^{ia}-z))/π - (b-a)/(2π).
// Throws ArgumentError if any piece is not constant.
Complex harmonic_piecewise_constant(const BoundaryFunction& f, Complex z);

// ---------------------------------------------------------------------------
// Subharmonicity.

struct ScanOptions {
  std::size_t grid_n = 16;   // radial levels; 2·grid_n angles
  double h = 1e-3;           // finite-difference step
  double tolerance = 1e-6;   // Δu < -tolerance counts as negative
  double epsilon = 1e-2;     // only |z| <= r₀ - epsilon is held to Δu >= 0
  std::size_t n_nodes = 0;   // quadrature nodes; 0 = default rule
  unsigned threads = 1;
};

// FD Laplacian (Richardson on h, h/2) of the quadrature extension of f over
// a polar grid on |z| <= min(r₀ + 0.2, 0.95). Throws PreconditionError
// unless f is real and nonnegative.
Report subharmonic_scan(Alpha alpha, const BoundaryFunction& f,
                        const ScanOptions& options);

struct RadiusBracket {
  double lo;
  double hi;
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
};

// Bisection on the sign of kernel_laplacian along the real axis (positive
// side for α > 0, negative side for α < 0), width <= 1e-10. Radii are
// returned as moduli. Throws ArgumentError for α = 0.
RadiusBracket radius_bracket(Alpha alpha);

// Samples of K_α and ΔK_α along the real axis with the bracket in the
// summary. For α = 0 the summary reports radius 1 and no sign change.
Report kernel_radius_scan(Alpha alpha, std::size_t samples = 101);

// Finite-difference Laplacian of F(-α/2,-α/2;1;|z|²) over |z| <= r_max.
Report hypergeometric_subharmonic_scan(Alpha alpha, std::size_t grid_n = 20,
                                       double r_max = 0.95, double h = 1e-3,
                                       double tolerance = 1e-8);

// t·F'(t)/F(t), F = F(-α/2,-α/2;1;t), over an increasing grid in (0, 1),
// plus the t = 1 limit. Throws ArgumentError unless α > 0 and the grid is
// strictly increasing inside (0, 1).
Report ratio_monotone_check(Alpha alpha, const std::vector<double>& t_grid);

// ---------------------------------------------------------------------------
// Riesz–Fejér inequality.

// p > 1, -1 < α <= 0 and α + 2/p > 0; anything else is a DomainError.
void require_riesz_fejer_hypotheses(double alpha, double p);

// C(α,p) = 2^{α-1} c_α/π · B((1+α+1/p)/2, (1-1/p)/2) · sec^{p-1}(π/2p).
double riesz_fejer_constant(Alpha alpha, double p);

// G(t) = ∫_0^{π/2} (sin x cos x)^{α+1/p} / sin(x + t/2)^{α+2/p} dx for
// t ∈ [0, π]. Requires p > 1 and α + 2/p > 0. Absolute error <= 1e-9.
double g_function(Alpha alpha, double p, double t);

struct RieszFejerSpec {
  double alpha = 0.0;
  double p = 2.0;
  double s = 0.0;                  // diameter direction
  std::size_t radial_nodes = 20;   // Gauss–Legendre order per radial panel
  std::size_t boundary_nodes = 4096;
  std::size_t n_samples = 256;     // series route sampling
  double edge = 1e-4;              // panels stop at 1 - |r| = edge
};

struct RieszFejerResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
};

// Evaluates ∫_{-1}^{1}|u(r e^{is})|^p dr against C(α,p)∫|f|^p dθ with u from
// the series route. Radial panels are graded geometrically toward r = ±1;
// the last sliver of width `edge` is closed with the boundary value.
class RieszFejerChecker {
 public:
  explicit RieszFejerChecker(const RieszFejerSpec& spec);

  const RieszFejerSpec& spec() const noexcept { return spec_; }
  double constant() const noexcept { return constant_; }

  RieszFejerResult check(const BoundaryFunction& f, double s) const;
  RieszFejerResult check(const BoundaryFunction& f) const {
    return check(f, spec_.s);
  }

 private:
  // Row pointers F(-α/2, n-α/2; n+1; r_k²), n = 0..max_index, computing
  // missing rows on demand. Rows never move once built.
  std::vector<const double*> hyp_rows(int max_index) const;

  RieszFejerSpec spec_;
  double constant_;
  std::vector<double> nodes_;    // radii in (0, 1 - edge)
  std::vector<double> weights_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::vector<double>> hyp_cache_;
};

RieszFejerResult riesz_fejer_check(const RieszFejerSpec& spec,
                                   const BoundaryFunction& f);

// Seeded random complex trigonometric polynomial, degree drawn from
// [0, max_degree], coefficients uniform in [-1, 1) + i[-1, 1).
BoundaryFunction random_trig_poly(std::uint64_t seed, int max_degree);

struct TrialOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 7;
  std::vector<double> s_values{0.0};
  int max_degree = 6;
  double tolerance = 1e-8;  // margin >= -tolerance passes
  unsigned threads = 1;
};

// One record per (trial, s). Trial k uses seed' = seed + k, so a failing
// record is reproducible from the metadata alone.
Report riesz_fejer_trials(const RieszFejerSpec& spec,
                          const TrialOptions& options);

}  // namespace alphaharm
