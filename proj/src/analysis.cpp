#include "alphaharm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>

#include "alphaharm/errors.hpp"
#include "alphaharm/parallel.hpp"
#include "alphaharm/quadrature.hpp"
#include "alphaharm/solver.hpp"
#include "alphaharm/specfun.hpp"

namespace alphaharm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Richardson-extrapolated five-point Laplacian and the gradient terms of T_α
// from the same stencil values.
struct StencilResult {
  double value;
  double laplacian;
  double residual;
};

template <typename Fn>
StencilResult stencil(double alpha, Fn&& u, double x, double y, double h) {
  const double c = u(x, y);
  const double r2 = x * x + y * y;
  const double w_low = std::pow(1.0 - r2, -alpha - 1.0);
  const double w_lap = 0.25 * std::pow(1.0 - r2, -alpha);
  auto at = [&](double s) {
    const double e = u(x + s, y);
    const double w = u(x - s, y);
    const double n = u(x, y + s);
    const double so = u(x, y - s);
    const double lap = (e + w + n + so - 4.0 * c) / (s * s);
    const double radial = x * (e - w) / (2.0 * s) + y * (n - so) / (2.0 * s);
    const double t =
        w_low * (-0.25 * alpha * alpha * c + 0.5 * alpha * radial) +
        w_lap * lap;
    return std::pair{lap, t};
  };
  const auto [lap_h, t_h] = at(h);
  const auto [lap_q, t_q] = at(0.5 * h);
  return StencilResult{c, (4.0 * lap_q - lap_h) / 3.0,
                       std::fabs((4.0 * t_q - t_h) / 3.0)};
}

void require_real_nonnegative(const BoundaryFunction& f) {
  auto check = [](Complex v, double theta) {
    if (!(v.real() >= -1e-14) || std::fabs(v.imag()) > 1e-14) {
      throw PreconditionError(
          "boundary data must be real and nonnegative; value at theta=" +
          format_double(theta) + " is (" + format_double(v.real()) + ", " +
          format_double(v.imag()) + ")");
    }
  };
  constexpr std::size_t kProbe = 4096;
  const double start = f.period_start();
  for (std::size_t k = 0; k < kProbe; ++k) {
    const double t = start + kTwoPi * static_cast<double>(k) / kProbe;
    check(f(t), t);
  }
  for (const Piece& piece : f.pieces()) {
    const double a = piece.theta_start.value;
    const double b = piece.theta_end.value;
    check(piece.value_at(a), a);
    check(piece.value_at(b), b);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Complex harmonic_piecewise_constant(const BoundaryFunction& f, Complex z) {
  Complex sum;
  for (const Piece& piece : f.pieces()) {
    const auto* c = std::get_if<ConstPayload>(&piece.payload);
    if (c == nullptr) {
      throw ArgumentError("harmonic_piecewise_constant: piece is not constant");
    }
    const double a = piece.theta_start.value;
    const double b = piece.theta_end.value;
    double angle = std::arg((std::polar(1.0, b) - z) / (std::polar(1.0, a) - z));
    if (angle < 0.0) angle += kTwoPi;
    sum += c->value * (angle / kPi - (b - a) / kTwoPi);
  }
  return sum;
}

double jump_scaling_weight(Alpha alpha, double gamma) {
  if (!(gamma > 0.0 && gamma < kPi)) {
    throw ArgumentError("jump_scaling_weight: gamma must lie in (0, pi)");
  }
  const double a = alpha.value();
  // cos φ via the distance to ±π/2 keeps cos^α accurate for α < 0.
  const double lo = gamma - 0.5 * kPi;
  const QuadratureResult part = tanh_sinh(
      [&](double, double from_lo, double to_hi) {
        const double c = from_lo < to_hi ? std::sin(gamma + from_lo)
                                         : std::sin(to_hi);
        return std::pow(c, a);
      },
      lo, 0.5 * kPi, 1e-14, 10);
  return part.value / beta_fn(0.5, 0.5 * (a + 1.0));
}

JumpProbeResult approach_probe(Alpha alpha, const BoundaryFunction& f,
                               const JumpProbeSpec& spec) {
  if (!(spec.gamma > 0.0 && spec.gamma < kPi)) {
    throw ArgumentError("jump_probe: gamma must lie in (0, pi)");
  }
  if (spec.distances.empty()) {
    throw ArgumentError("jump_probe: at least one distance is required");
  }
  for (std::size_t k = 0; k < spec.distances.size(); ++k) {
    const double d = spec.distances[k];
    if (!(d > 0.0 && d < 1.0)) {
      throw ArgumentError("jump_probe: distances must lie in (0, 1)");
    }
    if (k > 0 && !(d < spec.distances[k - 1])) {
      throw ArgumentError("jump_probe: distances must be strictly decreasing");
    }
  }

  JumpProbeResult out;
  out.upper = f.right_limit(spec.theta0);
  out.lower = f.left_limit(spec.theta0);
  const double weight = spec.gamma / kPi;
  out.predicted = weight * out.lower + (1.0 - weight) * out.upper;
  const double w = jump_scaling_weight(alpha, spec.gamma);
  out.scaling_predicted = w * out.upper + (1.0 - w) * out.lower;
  out.exponent = std::min(1.0, 1.0 + alpha.value());

  const Complex base = std::polar(1.0, spec.theta0);
  const Complex direction =
      std::polar(1.0, spec.theta0 + 0.5 * kPi + spec.gamma);
  for (double d : spec.distances) {
    const Complex z = base + d * direction;
    if (!(std::norm(z) < 1.0)) {
      throw ArgumentError("jump_probe: probe point at distance " +
                          format_double(d) + " leaves the disk");
    }
    out.samples.push_back({d, z, extend_panels(alpha, f, DiskPoint(z))});
  }

  const std::size_t n = out.samples.size();
  if (n == 1) {
    out.limit = out.samples[0].u;
  } else {
    const auto& s1 = out.samples[n - 2];
    const auto& s2 = out.samples[n - 1];
    const double w1 = std::pow(s1.distance, out.exponent);
    const double w2 = std::pow(s2.distance, out.exponent);
    out.limit = (s2.u * w1 - s1.u * w2) / (w1 - w2);
  }
  out.error = std::abs(out.limit - out.predicted);

  const bool piecewise_constant =
      std::all_of(f.pieces().begin(), f.pieces().end(), [](const Piece& p) {
        return std::holds_alternative<ConstPayload>(p.payload);
      });
  if (alpha.value() == 0.0 && piecewise_constant) {
    double worst = 0.0;
    for (const auto& s : out.samples) {
      worst = std::max(worst,
                       std::abs(s.u - harmonic_piecewise_constant(f, s.z)));
    }
    out.harmonic_deviation = worst;
  }
  return out;
}

JumpProbeResult jump_probe(Alpha alpha, const BoundaryFunction& f,
                           const JumpProbeSpec& spec) {
  if (!f.is_jump_point(spec.theta0)) {
    throw ArgumentError("jump_probe: theta0 = " + format_double(spec.theta0) +
                        " is not a jump point of the boundary data");
  }
  return approach_probe(alpha, f, spec);
}

// ---------------------------------------------------------------------------

Report subharmonic_scan(Alpha alpha, const BoundaryFunction& f,
                        const ScanOptions& options) {
  if (options.grid_n < 2) throw ArgumentError("subharmonic_scan: grid_n >= 2");
  if (!(options.h > 0.0)) throw ArgumentError("subharmonic_scan: h > 0");
  require_real_nonnegative(f);

  const double a = alpha.value();
  const double r0 = subharmonic_radius(alpha);
  const double radius = std::min(r0 + 0.2, 0.95);
  if (!(radius + 2.0 * options.h < 1.0)) {
    throw DomainError("subharmonic_scan: stencil leaves the disk");
  }
  const std::size_t n_r = options.grid_n;
  const std::size_t n_theta = 2 * options.grid_n;

  auto u = [&](double x, double y) {
    const DiskPoint z(x, y);
    const Complex v = options.n_nodes == 0
                          ? extend_quadrature(alpha, f, z)
                          : extend_quadrature(alpha, f, z, options.n_nodes);
    return v.real();
  };

  std::vector<std::vector<double>> rows(n_r * n_theta);
  parallel_for(rows.size(), options.threads, [&](std::size_t idx) {
    const std::size_t i = idx / n_theta;
    const std::size_t j = idx % n_theta;
    const double r = radius * static_cast<double>(i) /
                     static_cast<double>(n_r - 1);
    const double t = kTwoPi * static_cast<double>(j) /
                     static_cast<double>(n_theta);
    const double x = r * std::cos(t);
    const double y = r * std::sin(t);
    const StencilResult s = stencil(a, u, x, y, options.h);
    const bool held = r <= r0 - options.epsilon;
    const bool flagged = held && s.laplacian < -options.tolerance;
    rows[idx] = {r, t, x, y, s.value, s.laplacian, s.residual,
                 flagged ? 1.0 : 0.0};
  });

  Report rep;
  rep.kind = "subharmonic_scan";
  rep.columns = {"r", "theta", "re", "im", "u", "laplacian", "residual",
                 "flagged"};
  std::size_t violations = 0;
  double min_lap = std::numeric_limits<double>::infinity();
  double min_lap_inside = std::numeric_limits<double>::infinity();
  double first_negative = std::numeric_limits<double>::infinity();
  double max_residual = 0.0;
  for (auto& row : rows) {
    const double r = row[0];
    const double lap = row[5];
    min_lap = std::min(min_lap, lap);
    if (r <= r0 - options.epsilon) min_lap_inside = std::min(min_lap_inside, lap);
    if (lap < -options.tolerance) first_negative = std::min(first_negative, r);
    max_residual = std::max(max_residual, row[6]);
    if (row[7] != 0.0) ++violations;
    rep.add_row(std::move(row));
  }

  rep.metadata = {{"alpha", a},
                  {"h", options.h},
                  {"tolerance", options.tolerance},
                  {"epsilon", options.epsilon},
                  {"grid_n", options.grid_n},
                  {"n_r", n_r},
                  {"n_theta", n_theta},
                  {"n_nodes", options.n_nodes},
                  {"boundary", f.to_json()}};
  rep.summary = {{"subharmonic_radius", r0},
                 {"scan_radius", radius},
                 {"violations", violations},
                 {"min_laplacian", min_lap},
                 {"max_residual", max_residual}};
  rep.summary["min_laplacian_inside"] =
      std::isfinite(min_lap_inside) ? nlohmann::json(min_lap_inside)
                                    : nlohmann::json(nullptr);
  rep.summary["first_negative_radius"] =
      std::isfinite(first_negative) ? nlohmann::json(first_negative)
                                    : nlohmann::json(nullptr);
  rep.passed = violations == 0;
  return rep;
}

RadiusBracket radius_bracket(Alpha alpha) {
  const double a = alpha.value();
  if (a == 0.0) {
    throw ArgumentError(
        "radius_bracket: alpha = 0 has no sign change (radius is 1)");
  }
  const double sign = a > 0.0 ? 1.0 : -1.0;
  auto lap = [&](double r) {
    return kernel_laplacian(alpha, DiskPoint(sign * r, 0.0));
  };
  double lo = 0.0;
  double hi = 0.999;
  // The radius approaches 1 as α → -1; push hi outward until ΔK < 0.
  while (!(lap(hi) < 0.0)) {
    if (1.0 - hi < 1e-14) {
      throw AccuracyError("radius_bracket: no sign change found", hi, 1.0 - hi,
                          0);
    }
    hi = 1.0 - 0.1 * (1.0 - hi);
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (lap(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RadiusBracket{lo, hi};
}

Report kernel_radius_scan(Alpha alpha, std::size_t samples) {
  if (samples < 2) throw ArgumentError("kernel_radius_scan: samples >= 2");
  const double a = alpha.value();
  const double sign = a < 0.0 ? -1.0 : 1.0;
  const double theta = a < 0.0 ? kPi : 0.0;
  const double r0 = subharmonic_radius(alpha);

  Report rep;
  rep.kind = "kernel_radius_scan";
  rep.columns = {"r", "theta", "K", "lapK", "M"};
  std::optional<double> grid_change;
  double previous = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double r = 0.99 * static_cast<double>(k) /
                     static_cast<double>(samples - 1);
    const DiskPoint z(sign * r, 0.0);
    const double lap = kernel_laplacian(alpha, z);
    if (k > 0 && !grid_change && previous >= 0.0 && lap < 0.0) {
      grid_change = r;
    }
    previous = lap;
    rep.add_row({r, theta, kernel_eval(alpha, z), lap, kernel_mass(alpha, r)});
  }

  rep.metadata = {{"alpha", a}, {"samples", samples}, {"axis_angle", theta}};
  rep.summary = {{"subharmonic_radius", r0}};
  rep.summary["grid_sign_change"] =
      grid_change ? nlohmann::json(*grid_change) : nlohmann::json(nullptr);
  if (a == 0.0) {
    rep.summary["bracket"] = nullptr;
    rep.summary["all_nonnegative"] = true;
    rep.passed = !grid_change.has_value();
    return rep;
  }
  const RadiusBracket b = radius_bracket(alpha);
  const double deviation = std::fabs(b.midpoint() - r0);
  rep.summary["bracket"] = {{"lo", b.lo}, {"hi", b.hi}, {"midpoint", b.midpoint()}};
  rep.summary["deviation"] = deviation;
  rep.summary["all_nonnegative"] = false;
  rep.passed = deviation <= 1e-9 && b.lo <= r0 && r0 <= b.hi;
  return rep;
}

Report hypergeometric_subharmonic_scan(Alpha alpha, std::size_t grid_n,
                                       double r_max, double h,
                                       double tolerance) {
  if (grid_n < 2) throw ArgumentError("hypergeometric scan: grid_n >= 2");
  if (!(h > 0.0) || !(r_max >= 0.0) || !(r_max + 2.0 * h < 1.0)) {
    throw DomainError("hypergeometric scan: stencil leaves the disk");
  }
  const double a = alpha.value();
  auto F = [&](double x, double y) {
    return hyp2f1(-0.5 * a, -0.5 * a, 1.0, x * x + y * y);
  };
  Report rep;
  rep.kind = "hypergeometric_subharmonic_scan";
  rep.columns = {"r", "theta", "F", "laplacian"};
  const std::size_t n_theta = 2 * grid_n;
  std::size_t violations = 0;
  double min_lap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double r = r_max * static_cast<double>(i) /
                     static_cast<double>(grid_n - 1);
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double t = kTwoPi * static_cast<double>(j) /
                       static_cast<double>(n_theta);
      const StencilResult s = stencil(a, F, r * std::cos(t), r * std::sin(t), h);
      min_lap = std::min(min_lap, s.laplacian);
      if (s.laplacian < -tolerance) ++violations;
      rep.add_row({r, t, s.value, s.laplacian});
    }
  }
  rep.metadata = {{"alpha", a}, {"grid_n", grid_n}, {"r_max", r_max},
                  {"h", h},     {"tolerance", tolerance}};
  rep.summary = {{"min_laplacian", min_lap}, {"violations", violations}};
  rep.passed = violations == 0;
  return rep;
}

Report ratio_monotone_check(Alpha alpha, const std::vector<double>& t_grid) {
  const double a = alpha.value();
  if (!(a > 0.0)) throw ArgumentError("ratio_monotone_check: requires alpha > 0");
  if (t_grid.empty()) throw ArgumentError("ratio_monotone_check: empty grid");
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > 0.0 && t_grid[k] < 1.0) ||
        (k > 0 && !(t_grid[k] > t_grid[k - 1]))) {
      throw ArgumentError(
          "ratio_monotone_check: grid must increase strictly inside (0, 1)");
    }
  }
  const double ha = -0.5 * a;
  const double bound = 0.25 * a;

  Report rep;
  rep.kind = "ratio_monotone_check";
  rep.columns = {"t", "F", "dF", "ratio"};
  bool monotone = true;
  double max_ratio = -std::numeric_limits<double>::infinity();
  double previous = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double F = hyp2f1(ha, ha, 1.0, t);
    const double dF = hyp2f1_derivative(ha, ha, 1.0, t);
    const double ratio = t * dF / F;
    // Non-strict, with one rounding unit of slack per step.
    if (ratio < previous - 1e-14 * std::fabs(previous)) monotone = false;
    previous = ratio;
    max_ratio = std::max(max_ratio, ratio);
    rep.add_row({t, F, dF, ratio});
  }
  // F'(1)/F(1) through Gauss sums on the shifted parameters.
  const double limit = 0.25 * a * a * hyp2f1_at_one(ha + 1.0, ha + 1.0, 2.0) /
                       hyp2f1_at_one(ha, ha, 1.0);
  const double limit_error = std::fabs(limit - bound);
  const bool bounded = max_ratio <= bound + 1e-10;

  rep.metadata = {{"alpha", a}, {"points", t_grid.size()}};
  rep.summary = {{"limit_at_one", limit},   {"alpha_over_4", bound},
                 {"limit_error", limit_error}, {"monotone", monotone},
                 {"max_ratio", max_ratio},  {"bounded", bounded}};
  rep.passed = monotone && bounded && limit_error <= 1e-9;
  return rep;
}

// ---------------------------------------------------------------------------

void require_riesz_fejer_hypotheses(double alpha, double p) {
  if (!(p > 1.0) || !(alpha > -1.0) || !(alpha <= 0.0) ||
      !(alpha + 2.0 / p > 0.0)) {
    throw DomainError(
        "Riesz-Fejer hypotheses need p > 1, -1 < alpha <= 0 and "
        "alpha + 2/p > 0 (alpha=" +
        format_double(alpha) + ", p=" + format_double(p) + ")");
  }
}

double riesz_fejer_constant(Alpha alpha, double p) {
  const double a = alpha.value();
  require_riesz_fejer_hypotheses(a, p);
  const double beta = beta_fn(0.5 * (1.0 + a + 1.0 / p), 0.5 * (1.0 - 1.0 / p));
  const double sec = 1.0 / std::cos(kPi / (2.0 * p));
  return std::pow(2.0, a - 1.0) * c_alpha(alpha) / kPi * beta *
         std::pow(sec, p - 1.0);
}

double g_function(Alpha alpha, double p, double t) {
  const double a = alpha.value();
  if (!(p > 1.0) || !(a + 2.0 / p > 0.0)) {
    throw DomainError("g_function: requires p > 1 and alpha + 2/p > 0");
  }
  if (!(t >= 0.0 && t <= kPi)) {
    throw DomainError("g_function: t must lie in [0, pi]");
  }
  const double e_num = a + 1.0 / p;
  const double e_den = a + 2.0 / p;
  const double half_t = 0.5 * t;
  const double half_rest = 0.5 * (kPi - t);  // π/2 - t/2
  constexpr double kQuarter = 0.25 * std::numbers::pi;
  constexpr double kHalf = 0.5 * std::numbers::pi;

  // x is described by its distances to 0 and π/2, so sin x and cos x keep
  // full relative accuracy at the endpoints. sin(x + t/2) is only small
  // near (x, t) = (0, 0) or (π/2, π), and each branch uses the form that
  // is exact there.
  auto integrand = [&](double dl, double dr) {
    const double sx = std::sin(dl);
    const double cx = std::sin(dr);
    const double shifted = dl + half_t <= kHalf ? std::sin(dl + half_t)
                                                : std::sin(dr + half_rest);
    return std::pow(sx * cx, e_num) / std::pow(shifted, e_den);
  };

  // Geometric breakpoints resolve the near-singularity at x = -t/2 (and its
  // mirror at x = π/2 + (π - t)/2) when t or π - t is small.
  std::vector<double> cuts{0.0, kHalf};
  for (double w = half_t; w > 0.0 && w < kQuarter; w *= 2.0) cuts.push_back(w);
  for (double w = half_rest; w > 0.0 && w < kQuarter; w *= 2.0) {
    cuts.push_back(kHalf - w);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const QuadratureResult r = tanh_sinh(
        [&](double, double from_lo, double to_hi) {
          return integrand(lo + from_lo, (kHalf - hi) + to_hi);
        },
        lo, hi, 1e-13, 10);
    total += r.value;
  }
  return total;
}

// ---------------------------------------------------------------------------

RieszFejerChecker::RieszFejerChecker(const RieszFejerSpec& spec)
    : spec_(spec) {
  constant_ = riesz_fejer_constant(Alpha(spec.alpha), spec.p);
  if (spec.radial_nodes < 2) throw ArgumentError("radial_nodes >= 2");
  if (spec.boundary_nodes < 8) throw ArgumentError("boundary_nodes >= 8");
  if (!(spec.edge > 0.0 && spec.edge < 0.5)) {
    throw ArgumentError("edge must lie in (0, 0.5)");
  }
  std::vector<double> breaks{0.0, 0.5};
  for (double gap = 0.25; gap > spec.edge; gap *= 0.5) breaks.push_back(1.0 - gap);
  breaks.push_back(1.0 - spec.edge);

  const GaussLegendreRule& rule = gauss_legendre(spec.radial_nodes);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double half = 0.5 * (breaks[i + 1] - breaks[i]);
    const double mid = 0.5 * (breaks[i + 1] + breaks[i]);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      nodes_.push_back(mid + half * rule.nodes[q]);
      weights_.push_back(half * rule.weights[q]);
    }
  }
  nodes_.push_back(1.0 - spec.edge);  // sliver anchor, not a quadrature node
}

std::vector<const double*> RieszFejerChecker::hyp_rows(int max_index) const {
  const double a = spec_.alpha;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  while (hyp_cache_.size() <= static_cast<std::size_t>(max_index)) {
    const int n = static_cast<int>(hyp_cache_.size());
    std::vector<double> values(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      values[k] = hyp2f1(-0.5 * a, n - 0.5 * a, n + 1.0, nodes_[k] * nodes_[k]);
    }
    hyp_cache_.push_back(std::move(values));
  }
  std::vector<const double*> rows;
  for (int n = 0; n <= max_index; ++n) rows.push_back(hyp_cache_[n].data());
  return rows;
}

RieszFejerResult RieszFejerChecker::check(const BoundaryFunction& f,
                                          double s) const {
  const double p = spec_.p;
  const AlphaHarmonicSeries series =
      dirichlet_solve(Alpha(spec_.alpha), f, spec_.n_samples);
  const int N = series.max_index();
  const std::vector<const double*> hyp = hyp_rows(N);

  auto u_at = [&](double r, double phi, std::size_t node) {
    const Complex z = std::polar(r, phi);
    const Complex zb = std::conj(z);
    Complex sum = series.coeff(0) * hyp[0][node];
    Complex zn(1.0, 0.0);
    Complex zbn(1.0, 0.0);
    for (int n = 1; n <= N; ++n) {
      zn *= z;
      zbn *= zb;
      sum += hyp[n][node] * (series.coeff(n) * zn + series.coeff(-n) * zbn);
    }
    return sum;
  };

  RieszFejerResult out;
  const std::size_t anchor = nodes_.size() - 1;
  for (double phi : {s, s + kPi}) {
    double ray = 0.0;
    for (std::size_t k = 0; k < anchor; ++k) {
      ray += weights_[k] * std::pow(std::abs(u_at(nodes_[k], phi, k)), p);
    }
    const double inner = std::pow(std::abs(u_at(nodes_[anchor], phi, anchor)), p);
    const double outer = std::pow(std::abs(f(phi)), p);
    ray += 0.5 * spec_.edge * (inner + outer);
    out.lhs += ray;
  }

  double boundary = 0.0;
  const double m = static_cast<double>(spec_.boundary_nodes);
  for (std::size_t k = 0; k < spec_.boundary_nodes; ++k) {
    boundary += std::pow(std::abs(f(kTwoPi * static_cast<double>(k) / m)), p);
  }
  out.rhs = constant_ * boundary * kTwoPi / m;
  out.margin = out.rhs - out.lhs;
  return out;
}

RieszFejerResult riesz_fejer_check(const RieszFejerSpec& spec,
                                   const BoundaryFunction& f) {
  return RieszFejerChecker(spec).check(f);
}

BoundaryFunction random_trig_poly(std::uint64_t seed, int max_degree) {
  if (max_degree < 0) throw ArgumentError("random_trig_poly: max_degree >= 0");
  std::mt19937_64 gen(seed);
  const int degree =
      static_cast<int>(gen() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<TrigTerm> terms;
  for (int n = -degree; n <= degree; ++n) {
    const double re = 2.0 * uniform01(gen) - 1.0;
    const double im = 2.0 * uniform01(gen) - 1.0;
    terms.push_back({n, Complex(re, im)});
  }
  return BoundaryFunction::trig_poly(std::move(terms));
}

Report riesz_fejer_trials(const RieszFejerSpec& spec,
                          const TrialOptions& options) {
  if (options.s_values.empty()) throw ArgumentError("riesz trials: empty s list");
  const RieszFejerChecker checker(spec);
  std::vector<BoundaryFunction> data;
  data.reserve(options.trials);
  for (std::size_t k = 0; k < options.trials; ++k) {
    data.push_back(random_trig_poly(options.seed + k, options.max_degree));
  }

  const std::size_t ns = options.s_values.size();
  std::vector<RieszFejerResult> results(options.trials * ns);
  parallel_for(results.size(), options.threads, [&](std::size_t idx) {
    results[idx] = checker.check(data[idx / ns], options.s_values[idx % ns]);
  });

  Report rep;
  rep.kind = "riesz_fejer_trials";
  rep.columns = {"trial", "seed", "s", "lhs", "rhs", "margin", "passed"};
  double min_margin = std::numeric_limits<double>::infinity();
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    const std::size_t k = idx / ns;
    const double s = options.s_values[idx % ns];
    const RieszFejerResult& r = results[idx];
    const bool ok = r.margin >= -options.tolerance;
    min_margin = std::min(min_margin, r.margin);
    const std::uint64_t seed = options.seed + k;
    if (!ok) {
      failures.push_back({{"trial", k},
                          {"seed", seed},
                          {"s", s},
                          {"margin", r.margin},
                          {"boundary", data[k].to_json()}});
    }
    rep.add_row({static_cast<double>(k), static_cast<double>(seed), s, r.lhs,
                 r.rhs, r.margin, ok ? 1.0 : 0.0});
  }
  rep.metadata = {{"alpha", spec.alpha},
                  {"p", spec.p},
                  {"constant", checker.constant()},
                  {"seed", options.seed},
                  {"trials", options.trials},
                  {"s_values", options.s_values},
                  {"max_degree", options.max_degree},
                  {"tolerance", options.tolerance},
                  {"radial_nodes", spec.radial_nodes},
                  {"boundary_nodes", spec.boundary_nodes},
                  {"n_samples", spec.n_samples},
                  {"edge", spec.edge}};
  rep.summary = {{"min_margin", results.empty() ? 0.0 : min_margin},
                 {"failures", failures}};
  rep.passed = failures.empty();
  return rep;
}

}  // namespace alphaharm
