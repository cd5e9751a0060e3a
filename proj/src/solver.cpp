#include "alphaharm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alphaharm/errors.hpp"
#include "alphaharm/parallel.hpp"
#include "alphaharm/quadrature.hpp"
#include "alphaharm/specfun.hpp"

namespace alphaharm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kPanelOrder = 20;

void require_interior(DiskPoint z, const char* where) {
  if (!z.is_interior()) {
    throw DomainError(std::string(where) + ": requires |z| < 1");
  }
}

double radial_hyp(double alpha, int n, double r2) {
  return hyp2f1(-0.5 * alpha, n - 0.5 * alpha, n + 1.0, r2);
}

}  // namespace

AlphaHarmonicSeries::AlphaHarmonicSeries(Alpha alpha, FourierSpectrum coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {}

Complex AlphaHarmonicSeries::operator()(Complex z) const {
  const double a = alpha_.value();
  const double r2 = std::norm(z);
  const Complex zb = std::conj(z);
  Complex sum = coeffs_[0] * radial_hyp(a, 0, r2);
  Complex zn(1.0, 0.0);
  Complex zbn(1.0, 0.0);
  for (int n = 1; n <= coeffs_.max_index(); ++n) {
    zn *= z;
    zbn *= zb;
    const Complex cp = coeffs_[n];
    const Complex cm = coeffs_[-n];
    if (cp == Complex{} && cm == Complex{}) continue;
    const double F = radial_hyp(a, n, r2);
    sum += F * (cp * zn + cm * zbn);
  }
  return sum;
}

std::size_t default_quadrature_nodes(double r) {
  const double peak = std::ceil(64.0 / (1.0 - r));
  return std::max<std::size_t>(1024, static_cast<std::size_t>(peak));
}

Complex extend_quadrature(Alpha alpha, const BoundaryFunction& f, DiskPoint z,
                          std::size_t n_nodes) {
  require_interior(z, "extend_quadrature");
  if (n_nodes < 16) throw ArgumentError("extend_quadrature: n_nodes >= 16");

  const PoissonKernel kernel(alpha);
  const double r = z.modulus();
  const double theta = z.arg();
  const double radial = kernel.radial_factor(r);
  const double n = static_cast<double>(n_nodes);

  // Nodes sitting on a jump take the mean of the one-sided limits.
  std::vector<std::pair<std::size_t, Complex>> overrides;
  for (double jump : f.jump_points()) {
    double pos = std::fmod(jump / kTwoPi * n, n);
    if (pos < 0.0) pos += n;
    const double k = std::round(pos);
    if (std::fabs(k - pos) * kTwoPi / n <= 1e-12) {
      const auto idx = static_cast<std::size_t>(k) % n_nodes;
      overrides.emplace_back(idx,
                             0.5 * (f.left_limit(jump) + f.right_limit(jump)));
    }
  }

  Complex sum;
  for (std::size_t k = 0; k < n_nodes; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / n;
    Complex value;
    bool replaced = false;
    for (const auto& [idx, v] : overrides) {
      if (idx == k) {
        value = v;
        replaced = true;
      }
    }
    if (!replaced) value = f(t);
    sum += kernel.rotated(radial, r, theta - t) * value;
  }
  return sum / n;
}

Complex extend_quadrature(Alpha alpha, const BoundaryFunction& f,
                          DiskPoint z) {
  if (f.has_jumps()) return extend_panels(alpha, f, z);
  return extend_quadrature(alpha, f, z, default_quadrature_nodes(z.modulus()));
}

Complex extend_panels(Alpha alpha, const BoundaryFunction& f, DiskPoint z) {
  require_interior(z, "extend_panels");
  const PoissonKernel kernel(alpha);
  const double r = z.modulus();
  const double theta = z.arg();
  const double radial = kernel.radial_factor(r);
  const double width = std::max(1.0 - r, 1e-15);
  const double start = f.period_start();
  const double end = start + kTwoPi;

  std::vector<double> cuts{start, end};
  for (const auto& p : f.pieces()) cuts.push_back(p.theta_start.value);
  const double peak = f.reduce(theta);
  cuts.push_back(peak);
  for (double offset = width; offset < std::numbers::pi; offset *= 2.0) {
    cuts.push_back(f.reduce(peak + offset));
    cuts.push_back(f.reduce(peak - offset));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a < 1e-15; }),
             cuts.end());

  const GaussLegendreRule& rule = gauss_legendre(kPanelOrder);
  const auto pieces = f.pieces();
  Complex sum;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const Piece& piece = pieces[f.owner(0.5 * (a + b))];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Complex panel;
    for (std::size_t q = 0; q < kPanelOrder; ++q) {
      const double t = mid + half * rule.nodes[q];
      panel += rule.weights[q] * kernel.rotated(radial, r, theta - t) *
               piece.value_at(t);
    }
    sum += half * panel;
  }
  return sum / kTwoPi;
}

AlphaHarmonicSeries coefficient_map(Alpha alpha, const FourierSpectrum& spec) {
  const double a = alpha.value();
  const int N = spec.max_index();
  FourierSpectrum mapped(N);
  for (int n = 0; n <= N; ++n) {
    const double denom = hyp2f1_at_one(-0.5 * a, n - 0.5 * a, n + 1.0);
    mapped.at(n) = spec[n] / denom;
    if (n > 0) mapped.at(-n) = spec[-n] / denom;
  }
  return AlphaHarmonicSeries(alpha, std::move(mapped));
}

Complex extend_series(const AlphaHarmonicSeries& series, DiskPoint z) {
  require_interior(z, "extend_series");
  return series(z.value());
}

AlphaHarmonicSeries dirichlet_solve(Alpha alpha, const BoundaryFunction& f,
                                    std::size_t n_samples) {
  const std::vector<Complex> samples = sample(f, n_samples);
  const FourierSpectrum full = analyze(samples);
  double largest = 0.0;
  for (const Complex& c : full.coeffs()) largest = std::max(largest, std::abs(c));
  int N = 0;
  for (int n = full.max_index(); n > 0; --n) {
    if (std::max(std::abs(full[n]), std::abs(full[-n])) > 1e-13 * largest) {
      N = n;
      break;
    }
  }
  FourierSpectrum trimmed(N);
  for (int n = -N; n <= N; ++n) trimmed.at(n) = full[n];
  return coefficient_map(alpha, trimmed);
}

Complex harmonic_companion(const FourierSpectrum& spec, DiskPoint z) {
  require_interior(z, "harmonic_companion");
  const Complex w = z.value();
  const Complex wb = std::conj(w);
  Complex sum = spec[0];
  Complex wn(1.0, 0.0);
  Complex wbn(1.0, 0.0);
  for (int n = 1; n <= spec.max_index(); ++n) {
    wn *= w;
    wbn *= wb;
    sum += spec[n] * wn + spec[-n] * wbn;
  }
  return sum;
}

ResidualReport pde_residual_report(Alpha alpha, const DiskFunction& u,
                                   DiskPoint z, double h) {
  if (!(h > 0.0)) throw DomainError("pde_residual: h must be positive");
  if (!(z.modulus() + 2.0 * h < 1.0)) {
    throw DomainError("pde_residual: stencil leaves the disk");
  }
  const double a = alpha.value();
  const double x = z.re();
  const double y = z.im();
  const double one_minus_r2 = 1.0 - (x * x + y * y);
  const double w_low = std::pow(one_minus_r2, -a - 1.0);
  const double w_lap = 0.25 * std::pow(one_minus_r2, -a);

  auto apply = [&](double s) {
    const Complex c = u(Complex(x, y));
    const Complex east = u(Complex(x + s, y));
    const Complex west = u(Complex(x - s, y));
    const Complex north = u(Complex(x, y + s));
    const Complex south = u(Complex(x, y - s));
    const Complex ux = (east - west) / (2.0 * s);
    const Complex uy = (north - south) / (2.0 * s);
    const Complex lap = (east + west + north + south - 4.0 * c) / (s * s);
    return w_low * (-0.25 * a * a * c + 0.5 * a * (x * ux + y * uy)) +
           w_lap * lap;
  };

  const Complex coarse = apply(h);
  const Complex fine = apply(0.5 * h);
  ResidualReport out;
  out.residual_h = std::abs(coarse);
  out.residual_half = std::abs(fine);
  out.extrapolated = std::abs((4.0 * fine - coarse) / 3.0);
  out.residual = out.extrapolated;
  out.confirmed = out.extrapolated <= out.residual_half + 1e-9;
  return out;
}

double pde_residual(Alpha alpha, const DiskFunction& u, DiskPoint z,
                    double h) {
  return pde_residual_report(alpha, u, z, h).residual;
}

std::vector<GridPoint> evaluate_points(Alpha alpha, const BoundaryFunction& f,
                                       const std::vector<Complex>& points,
                                       const GridOptions& options) {
  std::vector<DiskPoint> zs;
  zs.reserve(points.size());
  for (const Complex& p : points) {
    zs.emplace_back(p);
    if (!zs.back().is_interior()) throw DomainError("extend: requires |z| < 1");
  }
  const bool need_series = options.method != ExtendMethod::kQuadrature;
  const bool need_quad = options.method != ExtendMethod::kSeries;
  std::optional<AlphaHarmonicSeries> series;
  if (need_series) series = dirichlet_solve(alpha, f, options.n_samples);

  std::vector<GridPoint> out(zs.size());
  parallel_for(out.size(), options.threads, [&](std::size_t idx) {
    const DiskPoint& z = zs[idx];
    GridPoint p{z.value(), {}, 0.0};
    Complex q;
    Complex s;
    if (need_quad) {
      q = options.n_nodes == 0 ? extend_quadrature(alpha, f, z)
                               : extend_quadrature(alpha, f, z, options.n_nodes);
    }
    if (need_series) s = (*series)(z.value());
    p.u = need_quad ? q : s;
    if (options.method == ExtendMethod::kBoth) p.discrepancy = std::abs(q - s);
    out[idx] = p;
  });
  return out;
}

std::vector<Complex> grid_points(const GridSpec& g) {
  if (g.n_r < 1 || g.n_theta < 1) {
    throw ArgumentError("grid needs n_r >= 1 and n_theta >= 1");
  }
  if (!(g.r_max >= 0.0 && g.r_max < 1.0)) {
    throw DomainError("grid r_max must lie in [0, 1)");
  }
  std::vector<Complex> pts;
  pts.reserve(g.n_r * g.n_theta);
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r =
        g.n_r == 1 ? 0.0
                   : g.r_max * static_cast<double>(i) /
                         static_cast<double>(g.n_r - 1);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const double t =
          kTwoPi * static_cast<double>(j) / static_cast<double>(g.n_theta);
      pts.push_back(DiskPoint::from_polar(r, t).value());
    }
  }
  return pts;
}

std::vector<GridPoint> evaluate_grid(Alpha alpha, const BoundaryFunction& f,
                                     const GridOptions& options) {
  return evaluate_points(alpha, f, grid_points(options.grid), options);
}

}  // namespace alphaharm
