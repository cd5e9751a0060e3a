#include "alphaharm/tables.hpp"

#include <algorithm>
#include <cmath>

#include "alphaharm/errors.hpp"

namespace alphaharm {
namespace {

nlohmann::json complex_json(Complex v) {
  return nlohmann::json{{"re", v.real()}, {"im", v.imag()}};
}

const char* method_name(ExtendMethod m) {
  switch (m) {
    case ExtendMethod::kQuadrature: return "quadrature";
    case ExtendMethod::kSeries: return "series";
    case ExtendMethod::kBoth: return "both";
  }
  return "?";
}

}  // namespace

Report kernel_table(Alpha alpha, const std::vector<Complex>& points) {
  Report rep;
  rep.kind = "kernel";
  rep.columns = {"r", "theta", "K", "lapK", "M"};
  for (const Complex& p : points) {
    const DiskPoint z(p);
    if (!z.is_interior()) throw DomainError("kernel: requires |z| < 1");
    rep.add_row({z.modulus(), z.arg(), kernel_eval(alpha, z),
                 kernel_laplacian(alpha, z), kernel_mass(alpha, z.modulus())});
  }
  rep.metadata = {{"alpha", alpha.value()},
                  {"c_alpha", c_alpha(alpha)},
                  {"subharmonic_radius", subharmonic_radius(alpha)}};
  return rep;
}

namespace {

Report extension_report(Alpha alpha, const BoundaryFunction& f,
                        const std::vector<GridPoint>& points,
                        const GridOptions& options, double threshold,
                        bool on_grid) {
  const bool both = options.method == ExtendMethod::kBoth;
  Report rep;
  rep.kind = "extend";
  rep.columns = {"re", "im", "u_re", "u_im"};
  if (both) rep.columns.push_back("discrepancy");
  double worst = 0.0;
  for (const GridPoint& p : points) {
    std::vector<double> row{p.z.real(), p.z.imag(), p.u.real(), p.u.imag()};
    if (both) {
      row.push_back(p.discrepancy);
      worst = std::max(worst, p.discrepancy);
    }
    rep.add_row(std::move(row));
  }
  rep.metadata = {{"alpha", alpha.value()},
                  {"method", method_name(options.method)},
                  {"n_nodes", options.n_nodes},
                  {"n_samples", options.n_samples},
                  {"boundary", f.to_json()}};
  if (on_grid) {
    rep.metadata["n_r"] = options.grid.n_r;
    rep.metadata["n_theta"] = options.grid.n_theta;
    rep.metadata["r_max"] = options.grid.r_max;
  }
  rep.summary = {{"points", points.size()}};
  if (both) {
    rep.summary["max_discrepancy"] = worst;
    rep.summary["threshold"] = threshold;
    rep.passed = worst <= threshold;
  }
  return rep;
}

}  // namespace

Report grid_report(Alpha alpha, const BoundaryFunction& f,
                   const GridOptions& options, double threshold) {
  return extension_report(alpha, f, evaluate_grid(alpha, f, options), options,
                          threshold, true);
}

Report points_report(Alpha alpha, const BoundaryFunction& f,
                     const std::vector<Complex>& points,
                     const GridOptions& options, double threshold) {
  return extension_report(alpha, f, evaluate_points(alpha, f, points, options),
                          options, threshold, false);
}

Report jump_probe_report(Alpha alpha, const BoundaryFunction& f, double theta0,
                         const std::vector<double>& gammas,
                         const std::vector<double>& distances,
                         double tolerance) {
  if (gammas.empty()) throw ArgumentError("probe-jump: empty gamma list");
  Report rep;
  rep.kind = "probe_jump";
  rep.columns = {"gamma", "distance", "re", "im", "u_re", "u_im"};
  nlohmann::json per_gamma = nlohmann::json::array();
  bool all_ok = true;
  for (double gamma : gammas) {
    JumpProbeSpec spec;
    spec.theta0 = theta0;
    spec.gamma = gamma;
    spec.distances = distances;
    const JumpProbeResult r = approach_probe(alpha, f, spec);
    for (const ProbeSample& s : r.samples) {
      rep.add_row({gamma, s.distance, s.z.real(), s.z.imag(), s.u.real(),
                   s.u.imag()});
    }
    const bool ok = r.error <= tolerance;
    all_ok = all_ok && ok;
    nlohmann::json item{{"gamma", gamma},
                        {"upper", complex_json(r.upper)},
                        {"lower", complex_json(r.lower)},
                        {"predicted", complex_json(r.predicted)},
                        {"scaling_predicted", complex_json(r.scaling_predicted)},
                        {"extrapolated", complex_json(r.limit)},
                        {"exponent", r.exponent},
                        {"error", r.error},
                        {"passed", ok}};
    item["harmonic_deviation"] = r.harmonic_deviation
                                     ? nlohmann::json(*r.harmonic_deviation)
                                     : nlohmann::json(nullptr);
    per_gamma.push_back(std::move(item));
  }
  rep.metadata = {{"alpha", alpha.value()},
                  {"theta0", theta0},
                  {"jump_point", f.is_jump_point(theta0)},
                  {"distances", distances},
                  {"tolerance", tolerance},
                  {"boundary", f.to_json()}};
  rep.summary = {{"probes", std::move(per_gamma)}};
  rep.passed = all_ok;
  return rep;
}

}  // namespace alphaharm
