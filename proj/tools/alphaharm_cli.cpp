// Command-line front end. Talks to the library exclusively through the C API.

#include <alphaharm/alphaharm.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

// A C API failure, carrying the library's message.
struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ah_status status) {
  if (status != AH_OK) {
    throw ApiError(std::string(ah_status_name(status)) + ": " + ah_last_error());
  }
}

struct BoundaryDeleter {
  void operator()(ah_boundary* p) const { ah_boundary_free(p); }
};
struct ReportDeleter {
  void operator()(ah_report* p) const { ah_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { ah_string_free(p); }
};
using BoundaryPtr = std::unique_ptr<ah_boundary, BoundaryDeleter>;
using ReportPtr = std::unique_ptr<ah_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return std::string(StringPtr(s).get()); }

struct GlobalOptions {
  std::string format = "csv";
  std::string output;
  unsigned threads = 1;
  bool degrees = false;
  bool print_config = false;
  std::string boundary;
  std::string boundary_file;
  bool dump_boundary = false;
};

struct KernelOptions {
  double alpha = 0.0;
  std::vector<std::string> z;
  std::string sweep_real;
};

struct ExtendOptions {
  double alpha = 0.0;
  std::string method = "quadrature";
  std::size_t n_r = 8;
  std::size_t n_theta = 16;
  double r_max = 0.9;
  std::size_t n_nodes = 0;
  std::size_t n_samples = 256;
  double threshold = 1e-8;
  std::vector<std::string> z;
};

struct ProbeOptions {
  double alpha = 0.0;
  std::string theta0;  // empty: first jump point of the data, else 0
  std::vector<std::string> gamma{"pi/2"};
  std::vector<double> distances{0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001};
  double tolerance = 0.02;
};

struct SubharmonicOptions {
  double alpha = 0.0;
  bool kernel_mode = false;
  bool hypergeometric = false;
  std::size_t grid_n = 16;
  double h = 1e-3;
  double tolerance = 1e-6;
  double epsilon = 1e-2;
  std::size_t n_nodes = 0;
  std::size_t samples = 101;
  double r_max = 0.95;
};

struct RieszOptions {
  double alpha = 0.0;
  double p = 2.0;
  bool show_constant = false;
  bool g_endpoints = false;
  std::size_t trials = 20;
  std::uint64_t seed = 7;
  std::vector<std::string> s{"0"};
  std::size_t radial_nodes = 20;
  std::size_t boundary_nodes = 4096;
  std::size_t n_samples = 256;
  double edge = 1e-4;
};

struct VerifyCliOptions {
  std::string suite = "all";
  std::uint64_t seed = 7;
  double perturb = 0.0;
};

double parse_angle(const std::string& text, bool degrees) {
  double v = 0.0;
  check(ah_parse_angle(text.c_str(), &v));
  return degrees ? v * std::numbers::pi / 180.0 : v;
}

std::vector<double> parse_angles(const std::vector<std::string>& items,
                                 bool degrees) {
  std::vector<double> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_angle(s, degrees));
  return out;
}

double parse_number(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw CLI::ValidationError(std::string(what) + ": not a number: '" + text +
                               "'");
  }
  return v;
}

// "re,im" or a bare real number.
std::pair<double, double> parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_number(text, "--z"), 0.0};
  return {parse_number(text.substr(0, comma), "--z"),
          parse_number(text.substr(comma + 1), "--z")};
}

struct Points {
  std::vector<double> re;
  std::vector<double> im;
};

Points parse_points(const std::vector<std::string>& items) {
  Points p;
  for (const auto& s : items) {
    const auto [x, y] = parse_point(s);
    p.re.push_back(x);
    p.im.push_back(y);
  }
  return p;
}

// "a:b:step", both ends included up to rounding of the step count.
std::vector<double> parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) {
    throw CLI::ValidationError("--sweep-real expects a:b:step");
  }
  const double a = parse_number(parts[0], "--sweep-real");
  const double b = parse_number(parts[1], "--sweep-real");
  const double step = parse_number(parts[2], "--sweep-real");
  if (!(step > 0.0) || !(b >= a)) {
    throw CLI::ValidationError("--sweep-real needs step > 0 and b >= a");
  }
  const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = a + static_cast<double>(i) * step;
  return xs;
}

class Runner {
 public:
  explicit Runner(const GlobalOptions& g) : g_(g) {}

  BoundaryPtr boundary() const {
    ah_boundary* raw = nullptr;
    if (!g_.boundary.empty()) {
      check(ah_boundary_from_json(g_.boundary.c_str(), &raw));
    } else if (!g_.boundary_file.empty()) {
      std::ifstream in(g_.boundary_file, std::ios::binary);
      if (!in) throw ApiError("cannot read boundary file " + g_.boundary_file);
      std::stringstream buf;
      buf << in.rdbuf();
      check(ah_boundary_from_json(buf.str().c_str(), &raw));
    } else {
      check(ah_boundary_constant(1.0, 0.0, &raw));
    }
    return BoundaryPtr(raw);
  }

  bool boundary_given() const {
    return !g_.boundary.empty() || !g_.boundary_file.empty();
  }

  json boundary_json() const {
    BoundaryPtr f = boundary();
    char* text = nullptr;
    check(ah_boundary_to_json(f.get(), &text));
    return json::parse(take(text));
  }

  json global_config() const {
    return json{{"format", g_.format},
                {"output", g_.output.empty() ? json(nullptr) : json(g_.output)},
                {"threads", g_.threads},
                {"degrees", g_.degrees},
                {"boundary", boundary_json()}};
  }

  // Handles --print-config and --dump-boundary; returns true if either ran.
  bool preflight(const std::string& command, const json& options) const {
    if (g_.print_config) {
      json cfg = global_config();
      cfg["command"] = command;
      cfg["options"] = options;
      emit(cfg.dump() + "\n");
      return true;
    }
    if (g_.dump_boundary) {
      BoundaryPtr f = boundary();
      char* text = nullptr;
      check(ah_boundary_to_json(f.get(), &text));
      emit(take(text) + "\n");
      return true;
    }
    return false;
  }

  void emit(const std::string& text) const {
    if (g_.output.empty()) {
      std::cout << text << std::flush;
      return;
    }
    std::ofstream out(g_.output, std::ios::binary);
    if (!out) throw ApiError("cannot write " + g_.output);
    out << text;
    if (!out) throw ApiError("write failed for " + g_.output);
  }

  int emit_report(const ReportPtr& rep) const {
    char* text = nullptr;
    if (g_.format == "json") {
      check(ah_report_to_json(rep.get(), &text));
    } else {
      check(ah_report_to_csv(rep.get(), &text));
    }
    emit(take(text));
    return ah_report_passed(rep.get()) ? kExitPass : kExitCheckFailed;
  }

  int kernel(const KernelOptions& o) const {
    const json cfg{{"alpha", o.alpha}, {"z", o.z}, {"sweep_real", o.sweep_real}};
    if (preflight("kernel", cfg)) return kExitPass;
    Points pts = parse_points(o.z);
    if (!o.sweep_real.empty()) {
      for (double x : parse_sweep(o.sweep_real)) {
        pts.re.push_back(x);
        pts.im.push_back(0.0);
      }
    }
    if (pts.re.empty()) {
      pts.re.push_back(0.0);
      pts.im.push_back(0.0);
    }
    ah_report* raw = nullptr;
    check(ah_kernel_table(o.alpha, pts.re.data(), pts.im.data(), pts.re.size(),
                          &raw));
    return emit_report(ReportPtr(raw));
  }

  int extend(const ExtendOptions& o) const {
    const json cfg{{"alpha", o.alpha},         {"method", o.method},
                   {"n_r", o.n_r},             {"n_theta", o.n_theta},
                   {"r_max", o.r_max},         {"n_nodes", o.n_nodes},
                   {"n_samples", o.n_samples}, {"threshold", o.threshold},
                   {"z", o.z}};
    if (preflight("extend", cfg)) return kExitPass;
    ah_grid_options go;
    ah_grid_options_default(&go);
    go.n_r = o.n_r;
    go.n_theta = o.n_theta;
    go.r_max = o.r_max;
    go.method = o.method == "series" ? AH_METHOD_SERIES
                : o.method == "both" ? AH_METHOD_BOTH
                                     : AH_METHOD_QUADRATURE;
    go.n_nodes = o.n_nodes;
    go.n_samples = o.n_samples;
    go.threads = g_.threads;
    go.threshold = o.threshold;
    BoundaryPtr f = boundary();
    ah_report* raw = nullptr;
    if (o.z.empty()) {
      check(ah_extend_grid(o.alpha, f.get(), &go, &raw));
    } else {
      const Points pts = parse_points(o.z);
      check(ah_extend_points(o.alpha, f.get(), pts.re.data(), pts.im.data(),
                             pts.re.size(), &go, &raw));
    }
    return emit_report(ReportPtr(raw));
  }

  int probe_jump(const ProbeOptions& o) const {
    BoundaryPtr f = boundary();
    double theta0 = 0.0;
    if (!o.theta0.empty()) {
      theta0 = parse_angle(o.theta0, g_.degrees);
    } else {
      std::size_t count = 0;
      double first = 0.0;
      check(ah_boundary_jumps(f.get(), &first, 1, &count));
      if (count > 0) theta0 = first;
    }
    const std::vector<double> gammas = parse_angles(o.gamma, g_.degrees);
    const json cfg{{"alpha", o.alpha},         {"theta0", theta0},
                   {"gamma", gammas},          {"distances", o.distances},
                   {"tolerance", o.tolerance}};
    if (preflight("probe-jump", cfg)) return kExitPass;
    ah_report* raw = nullptr;
    check(ah_probe_jump(o.alpha, f.get(), theta0, gammas.data(), gammas.size(),
                        o.distances.data(), o.distances.size(), o.tolerance,
                        &raw));
    return emit_report(ReportPtr(raw));
  }

  int subharmonic(const SubharmonicOptions& o) const {
    const json cfg{{"alpha", o.alpha},
                   {"kernel_mode", o.kernel_mode},
                   {"hypergeometric", o.hypergeometric},
                   {"grid_n", o.grid_n},
                   {"h", o.h},
                   {"tolerance", o.tolerance},
                   {"epsilon", o.epsilon},
                   {"n_nodes", o.n_nodes},
                   {"samples", o.samples},
                   {"r_max", o.r_max}};
    if (preflight("subharmonic", cfg)) return kExitPass;
    ah_report* raw = nullptr;
    if (o.kernel_mode) {
      check(ah_kernel_radius_scan(o.alpha, o.samples, &raw));
    } else if (o.hypergeometric) {
      check(ah_hypergeometric_scan(o.alpha, o.grid_n, o.r_max, o.h,
                                   o.tolerance, &raw));
    } else {
      ah_scan_options so;
      ah_scan_options_default(&so);
      so.grid_n = o.grid_n;
      so.h = o.h;
      so.tolerance = o.tolerance;
      so.epsilon = o.epsilon;
      so.n_nodes = o.n_nodes;
      so.threads = g_.threads;
      BoundaryPtr f = boundary();
      check(ah_subharmonic_scan(o.alpha, f.get(), &so, &raw));
    }
    return emit_report(ReportPtr(raw));
  }

  int riesz_fejer(const RieszOptions& o) const {
    const std::vector<double> s_values = parse_angles(o.s, g_.degrees);
    const json cfg{{"alpha", o.alpha},
                   {"p", o.p},
                   {"show_constant", o.show_constant},
                   {"g_endpoints", o.g_endpoints},
                   {"trials", o.trials},
                   {"seed", o.seed},
                   {"s", s_values},
                   {"radial_nodes", o.radial_nodes},
                   {"boundary_nodes", o.boundary_nodes},
                   {"n_samples", o.n_samples},
                   {"edge", o.edge}};
    if (preflight("riesz-fejer", cfg)) return kExitPass;
    ah_report* raw = nullptr;
    if (o.show_constant) {
      double c = 0.0;
      check(ah_riesz_fejer_constant(o.alpha, o.p, &c));
      const char* names[] = {"alpha", "p", "C"};
      const double values[] = {o.alpha, o.p, c};
      check(ah_scalar_report("riesz_fejer_constant", names, values, 3, 1, &raw));
      return emit_report(ReportPtr(raw));
    }
    if (o.g_endpoints) {
      double g0 = 0.0;
      double gpi = 0.0;
      check(ah_g_function(o.alpha, o.p, 0.0, &g0));
      check(ah_g_function(o.alpha, o.p, std::numbers::pi, &gpi));
      const double diff = std::abs(g0 - gpi);
      const char* names[] = {"alpha", "p", "G0", "Gpi", "difference"};
      const double values[] = {o.alpha, o.p, g0, gpi, diff};
      check(ah_scalar_report("g_endpoints", names, values, 5, diff <= 1e-9 ? 1 : 0,
                             &raw));
      return emit_report(ReportPtr(raw));
    }
    ah_riesz_options ro;
    ah_riesz_options_default(&ro);
    ro.alpha = o.alpha;
    ro.p = o.p;
    ro.radial_nodes = o.radial_nodes;
    ro.boundary_nodes = o.boundary_nodes;
    ro.n_samples = o.n_samples;
    ro.edge = o.edge;
    if (boundary_given()) {
      BoundaryPtr f = boundary();
      std::vector<double> lhs(s_values.size());
      std::vector<double> rhs(s_values.size());
      std::vector<double> margin(s_values.size());
      bool ok = true;
      std::vector<std::string> names;
      std::vector<double> values;
      for (std::size_t i = 0; i < s_values.size(); ++i) {
        ro.s = s_values[i];
        check(ah_riesz_fejer_check(&ro, f.get(), &lhs[i], &rhs[i], &margin[i]));
        ok = ok && margin[i] >= -1e-8;
        const std::string tag = std::to_string(i);
        names.insert(names.end(), {"s_" + tag, "lhs_" + tag, "rhs_" + tag,
                                   "margin_" + tag});
        values.insert(values.end(), {s_values[i], lhs[i], rhs[i], margin[i]});
      }
      std::vector<const char*> cnames;
      for (const auto& n : names) cnames.push_back(n.c_str());
      check(ah_scalar_report("riesz_fejer_check", cnames.data(), values.data(),
                             values.size(), ok ? 1 : 0, &raw));
      return emit_report(ReportPtr(raw));
    }
    check(ah_riesz_fejer_trials(&ro, o.trials, o.seed, s_values.data(),
                                s_values.size(), g_.threads, &raw));
    return emit_report(ReportPtr(raw));
  }

  int verify(const VerifyCliOptions& o) const {
    const json cfg{{"suite", o.suite}, {"seed", o.seed}, {"perturb", o.perturb}};
    if (preflight("verify", cfg)) return kExitPass;
    char* text = nullptr;
    int passed = 0;
    check(ah_verify(o.suite.c_str(), o.seed, o.perturb, g_.threads, &text,
                    &passed));
    emit(take(text));
    return passed ? kExitPass : kExitCheckFailed;
  }

 private:
  const GlobalOptions& g_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-harmonic functions on the unit disk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ah_version()));

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output,-o", g.output, "Write data to this file");
  app.add_option("--threads", g.threads, "Worker cap for parallel scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--degrees", g.degrees, "Angle flags are in degrees");
  app.add_flag("--print-config", g.print_config,
               "Print the effective configuration as JSON and exit");
  auto* inline_opt =
      app.add_option("--boundary", g.boundary, "Boundary data as inline JSON");
  app.add_option("--boundary-file", g.boundary_file, "Boundary data JSON file")
      ->excludes(inline_opt);
  app.add_flag("--dump-boundary", g.dump_boundary,
               "Print the parsed boundary description and exit");

  KernelOptions ko;
  auto* kernel = app.add_subcommand("kernel", "Tabulate K, its Laplacian and mass");
  kernel->fallthrough();
  kernel->add_option("--alpha", ko.alpha)->capture_default_str();
  kernel->add_option("--z", ko.z, "Point re,im (repeatable)");
  kernel->add_option("--sweep-real", ko.sweep_real, "Real-axis sweep a:b:step");

  ExtendOptions eo;
  auto* extend = app.add_subcommand("extend", "Extend boundary data into the disk");
  extend->fallthrough();
  extend->add_option("--alpha", eo.alpha)->capture_default_str();
  extend->add_option("--method", eo.method)
      ->check(CLI::IsMember({"quadrature", "series", "both"}))
      ->capture_default_str();
  extend->add_option("--n-r", eo.n_r)->capture_default_str();
  extend->add_option("--n-theta", eo.n_theta)->capture_default_str();
  extend->add_option("--r-max", eo.r_max)->capture_default_str();
  extend->add_option("--n-nodes", eo.n_nodes, "Quadrature nodes, 0 = default")
      ->capture_default_str();
  extend->add_option("--n-samples", eo.n_samples)->capture_default_str();
  extend->add_option("--threshold", eo.threshold,
                     "Max discrepancy accepted with --method both")
      ->capture_default_str();
  extend->add_option("--z", eo.z, "Evaluate at re,im instead of the grid");

  ProbeOptions po;
  auto* probe = app.add_subcommand("probe-jump", "Approach a boundary point");
  probe->fallthrough();
  probe->add_option("--alpha", po.alpha)->capture_default_str();
  probe->add_option("--theta0", po.theta0,
                    "Boundary angle; default the first jump point");
  probe->add_option("--gamma", po.gamma, "Approach angles")
      ->delimiter(',')
      ->capture_default_str();
  probe->add_option("--distances", po.distances)
      ->delimiter(',')
      ->capture_default_str();
  probe->add_option("--tolerance", po.tolerance)->capture_default_str();

  SubharmonicOptions so;
  auto* sub = app.add_subcommand("subharmonic", "Scan the sign of the Laplacian");
  sub->fallthrough();
  sub->add_option("--alpha", so.alpha)->capture_default_str();
  auto* km = sub->add_flag("--kernel-mode", so.kernel_mode,
                           "Bracket the kernel's sign change");
  sub->add_flag("--hypergeometric", so.hypergeometric,
                "Scan F(-a/2,-a/2;1;|z|^2)")
      ->excludes(km);
  sub->add_option("--grid-n", so.grid_n)->capture_default_str();
  sub->add_option("--step", so.h, "Finite-difference step")->capture_default_str();
  sub->add_option("--tolerance", so.tolerance)->capture_default_str();
  sub->add_option("--epsilon", so.epsilon)->capture_default_str();
  sub->add_option("--n-nodes", so.n_nodes)->capture_default_str();
  sub->add_option("--samples", so.samples)->capture_default_str();
  sub->add_option("--r-max", so.r_max)->capture_default_str();

  RieszOptions ro;
  auto* riesz = app.add_subcommand("riesz-fejer", "Riesz-Fejer inequality");
  riesz->fallthrough();
  riesz->add_option("--alpha", ro.alpha)->capture_default_str();
  riesz->add_option("--p", ro.p)->capture_default_str();
  auto* sc = riesz->add_flag("--show-constant", ro.show_constant);
  riesz->add_flag("--g-endpoints", ro.g_endpoints)->excludes(sc);
  riesz->add_option("--trials", ro.trials)->capture_default_str();
  riesz->add_option("--seed", ro.seed)->capture_default_str();
  riesz->add_option("--s", ro.s, "Diameter directions")
      ->delimiter(',')
      ->capture_default_str();
  riesz->add_option("--radial-nodes", ro.radial_nodes)->capture_default_str();
  riesz->add_option("--boundary-nodes", ro.boundary_nodes)->capture_default_str();
  riesz->add_option("--n-samples", ro.n_samples)->capture_default_str();
  riesz->add_option("--edge", ro.edge)->capture_default_str();

  VerifyCliOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->fallthrough();
  verify->add_option("--suite", vo.suite)
      ->check(CLI::IsMember({"all", "specfun", "kernel", "solver", "analysis"}))
      ->capture_default_str();
  verify->add_option("--seed", vo.seed)->capture_default_str();
  verify->add_option("--perturb", vo.perturb)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    const Runner run(g);
    if (*kernel) return run.kernel(ko);
    if (*extend) return run.extend(eo);
    if (*probe) return run.probe_jump(po);
    if (*sub) return run.subharmonic(so);
    if (*riesz) return run.riesz_fejer(ro);
    if (*verify) return run.verify(vo);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
