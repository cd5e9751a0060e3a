// Acceptance report: one PASS/FAIL line per criterion with the measured
// worst case next to its tolerance. Exit status 0 iff every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alphaharm/analysis.hpp"
#include "alphaharm/solver.hpp"
#include "alphaharm/specfun.hpp"
#include "alphaharm/verify.hpp"

using namespace alphaharm;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Complex point(double r_max) {
    return std::polar(r_max * std::sqrt(uniform(0, 1)), uniform(0, kTwoPi));
  }
  BoundaryFunction trig_poly(int degree) {
    std::vector<TrigTerm> terms;
    for (int n = -degree; n <= degree; ++n) {
      terms.push_back({n, Complex(uniform(-1, 1), uniform(-1, 1))});
    }
    return BoundaryFunction::trig_poly(std::move(terms));
  }

 private:
  std::mt19937_64 gen_;
};

// Accumulates the sub-checks of one criterion.
class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void at_most(const std::string& what, double measured, double tol) {
    add(what, measured, "<=", tol, measured <= tol);
  }
  void at_least(const std::string& what, double measured, double tol) {
    add(what, measured, ">=", tol, measured >= tol);
  }
  void below(const std::string& what, double measured, double tol) {
    add(what, measured, "<", tol, measured < tol);
  }
  void holds(const std::string& what, bool ok) {
    parts_.push_back(what + (ok ? " ok" : " VIOLATED"));
    ok_ = ok_ && ok;
  }

  bool finish(double seconds) const {
    std::printf("%s criterion %d: %s (%.2f s)\n", ok_ ? "PASS" : "FAIL", id_,
                title_.c_str(), seconds);
    for (const auto& p : parts_) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    return ok_;
  }

 private:
  void add(const std::string& what, double measured, const char* op, double tol,
           bool ok) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: %.3e %s %.1e%s", what.c_str(), measured,
                  op, tol, ok ? "" : "  <-- FAIL");
    parts_.emplace_back(buf);
    ok_ = ok_ && ok;
  }

  int id_;
  std::string title_;
  std::vector<std::string> parts_;
  bool ok_ = true;
};

std::string tag(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void criterion1(Criterion& c) {
  c.at_most("|F(a,b;c;0) - 1|", std::abs(hyp2f1(0.7, -1.3, 2.1, 0.0) - 1.0), 0.0);
  c.at_most("|F(1,1;2;0.5) - 2ln2|", std::abs(hyp2f1(1, 1, 2, 0.5) - 2 * std::log(2.0)),
            1e-12);
  c.at_most("|hyp2f1_at_one(-1,1,3) - 2/3|", std::abs(hyp2f1_at_one(-1, 1, 3) - 2.0 / 3),
            1e-13);
  c.at_most("|B(0.75,0.25) - pi*sqrt2|",
            std::abs(beta_fn(0.75, 0.25) - kPi * std::sqrt(2.0)), 1e-11);
  Rng rng(101);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double cc = rng.uniform(0.5, 3.0);
    const double a = rng.uniform(0.2, 2.5);
    const double b = cc - a + rng.uniform(0.05, 1.5);
    const double x = rng.uniform(0.0, 0.9);
    const double direct = hyp2f1(a, b, cc, x);
    worst = std::max(worst, std::abs(euler_transform(a, b, cc, x) - direct) /
                                std::max(1.0, std::abs(direct)));
  }
  c.at_most("Euler transform vs direct, 50 sets", worst, 1e-10);
}

void criterion2(Criterion& c) {
  double max_mass = 0.0;
  double worst_one = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Alpha a(-0.9 + 10.9 * (i + 1) / 50.0);
    for (int j = 0; j < 50; ++j) max_mass = std::max(max_mass, kernel_mass(a, j / 49.0));
    worst_one = std::max(worst_one, std::abs(kernel_mass(a, 1.0) - 1.0));
  }
  c.at_most("max kernel_mass - 1 on 50x50 grid", max_mass - 1.0, 1e-12);
  c.at_most("|kernel_mass(a,1) - 1|", worst_one, 1e-12);
  double worst_trap = 0.0;
  for (double alpha : {-0.9, -0.5, 0.0, 1.0, 3.0, 10.0}) {
    const PoissonKernel k{Alpha(alpha)};
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
      const int n = 4096;
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += k(std::polar(r, kTwoPi * m / n));
      worst_trap = std::max(worst_trap, std::abs(s / n - kernel_mass(Alpha(alpha), r)));
    }
  }
  c.at_most("trapezoid vs closed-form mass, r <= 0.9", worst_trap, 1e-10);
}

void criterion3(Criterion& c) {
  Rng rng(103);
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    const BoundaryFunction f = BoundaryFunction::trig_poly({{n, {1, 0}}});
    for (int k = 0; k < 20; ++k) {
      const Complex z = rng.point(0.95);
      worst = std::max(worst,
                       std::abs(extend_quadrature(Alpha(0), f, DiskPoint(z)) - std::pow(z, n)));
    }
  }
  c.at_most("|u - z^n|, n <= 8, 20 points", worst, 1e-10);
}

void criterion4(Criterion& c) {
  Rng rng(104);
  for (double alpha : {-0.5, 0.0, 0.5, 2.0, 5.0}) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const BoundaryFunction f = rng.trig_poly(rng.integer(0, 10));
      const AlphaHarmonicSeries s = dirichlet_solve(Alpha(alpha), f, 256);
      for (int k = 0; k < 20; ++k) {
        const DiskPoint z(rng.point(0.9));
        worst = std::max(worst, std::abs(extend_quadrature(Alpha(alpha), f, z) -
                                         extend_series(s, z)));
      }
    }
    c.at_most("alpha=" + tag(alpha) + " max |quadrature - series|", worst, 1e-8);
  }
}

void criterion5(Criterion& c) {
  Rng rng(105);
  for (double alpha : {-0.5, 0.0, 0.5, 2.0, 5.0}) {
    const Alpha a(alpha);
    const BoundaryFunction f = rng.trig_poly(6);
    const AlphaHarmonicSeries s = dirichlet_solve(a, f, 256);
    const PoissonKernel k(a);
    double worst_q = 0.0, worst_s = 0.0, worst_k = 0.0;
    bool confirmed = true;
    for (int i = 0; i < 20; ++i) {
      const DiskPoint z(rng.point(0.7));
      const auto q = pde_residual_report(
          a, [&](Complex w) { return extend_quadrature(a, f, DiskPoint(w)); }, z, 1e-3);
      const auto sr = pde_residual_report(a, [&](Complex w) { return s(w); }, z, 1e-3);
      const auto kr =
          pde_residual_report(a, [&](Complex w) { return Complex(k(w), 0); }, z, 1e-3);
      worst_q = std::max(worst_q, q.residual);
      worst_s = std::max(worst_s, sr.residual);
      worst_k = std::max(worst_k, kr.residual);
      confirmed = confirmed && q.confirmed && sr.confirmed && kr.confirmed;
    }
    const std::string t = "alpha=" + tag(alpha);
    c.at_most(t + " quadrature residual", worst_q, 1e-5);
    c.at_most(t + " series residual", worst_s, 1e-5);
    c.at_most(t + " kernel residual", worst_k, 1e-5);
    c.holds(t + " Richardson confirmation", confirmed);
  }
}

void criterion6(Criterion& c) {
  Rng rng(106);
  for (double alpha : {-0.5, 2.0}) {
    double worst_final = 0.0;
    bool decreasing = true;
    for (int trial = 0; trial < 5; ++trial) {
      const BoundaryFunction f = rng.trig_poly(rng.integer(1, 6));
      const double t0 = rng.uniform(0, kTwoPi);
      double prev = std::numeric_limits<double>::infinity();
      for (double r : {0.9, 0.99, 0.999}) {
        const double err = std::abs(
            extend_quadrature(Alpha(alpha), f, DiskPoint::from_polar(r, t0)) - f(t0));
        decreasing = decreasing && err < prev;
        prev = err;
      }
      worst_final = std::max(worst_final, prev);
    }
    const std::string t = "alpha=" + tag(alpha);
    c.below(t + " |u - f| at r=0.999", worst_final, 0.01);
    c.holds(t + " decreasing over r in {0.9,0.99,0.999}", decreasing);
  }
}

void criterion7(Criterion& c) {
  const BoundaryFunction f = BoundaryFunction::step(0.7, {1, 0}, {0, 0});
  for (double alpha : {-0.5, 0.0, 1.0, 3.0}) {
    double worst = 0.0;
    double worst_harmonic = 0.0;
    for (double gamma : {kPi / 6, kPi / 4, kPi / 2, 3 * kPi / 4}) {
      JumpProbeSpec spec;
      spec.theta0 = 0.7;
      spec.gamma = gamma;
      const JumpProbeResult r = jump_probe(Alpha(alpha), f, spec);
      worst = std::max(worst, r.error);
      if (alpha == 0.0) {
        // Classical value: the harmonic-measure limit and the closed-form
        // Poisson integral along the whole approach segment.
        worst_harmonic = std::max({worst_harmonic, r.error, *r.harmonic_deviation});
      }
    }
    c.at_most("alpha=" + tag(alpha) + " max |limit - weighted average|", worst, 0.02);
    if (alpha == 0.0) {
      c.at_most("alpha=0 deviation from the classical harmonic value", worst_harmonic,
                0.005);
    }
  }
}

void criterion8(Criterion& c) {
  for (double alpha : {0.5, 1.0, 3.0, 8.0, -0.2, -0.75}) {
    const RadiusBracket b = radius_bracket(Alpha(alpha));
    c.at_most("alpha=" + tag(alpha) + " |bracket - r0|",
              std::abs(b.midpoint() - subharmonic_radius(Alpha(alpha))), 1e-9);
  }
  c.at_most("alpha=3 |bracket - 1/3|", std::abs(radius_bracket(Alpha(3)).midpoint() - 1.0 / 3),
            1e-9);
  c.at_most("alpha=-0.75 |bracket - 1/3|",
            std::abs(radius_bracket(Alpha(-0.75)).midpoint() - 1.0 / 3), 1e-9);
  c.at_most("alpha=8 |bracket - 1/2|", std::abs(radius_bracket(Alpha(8)).midpoint() - 0.5),
            1e-9);
}

void criterion9(Criterion& c) {
  std::vector<double> t;
  for (int k = 1; k < 200; ++k) t.push_back(k / 200.0);
  for (double alpha : {1.0, 2.0, 4.0}) {
    const Report scan = hypergeometric_subharmonic_scan(Alpha(alpha), 20, 0.95, 1e-3, 1e-8);
    const std::string s = "alpha=" + tag(alpha);
    c.holds(s + " FD Laplacian >= -1e-8 on |z| <= 0.95", scan.passed);
    const Report ratio = ratio_monotone_check(Alpha(alpha), t);
    c.holds(s + " t F'/F monotone", ratio.summary["monotone"].get<bool>());
    c.at_most(s + " |limit - alpha/4|", ratio.summary["limit_error"].get<double>(), 1e-9);
  }
}

void criterion10(Criterion& c) {
  double worst_c = 0.0;
  for (double p : {1.5, 2.0, 3.0, 8.0}) {
    const double want = 0.5 * std::pow(1 / std::cos(kPi / (2 * p)), p);
    worst_c = std::max(worst_c, std::abs(riesz_fejer_constant(Alpha(0), p) - want));
  }
  c.at_most("|C(0,p) - sec^p(pi/2p)/2|", worst_c, 1e-12);
  c.at_most("|C(0,2) - 1|", std::abs(riesz_fejer_constant(Alpha(0), 2) - 1), 1e-12);
  for (auto [alpha, p] : {std::pair{-0.25, 2.0}, {-0.4, 3.0}, {0.0, 2.0}}) {
    const std::string s = "(alpha,p)=(" + tag(alpha) + "," + tag(p) + ")";
    const Alpha a(alpha);
    c.at_most(s + " |G(0) - G(pi)|", std::abs(g_function(a, p, 0) - g_function(a, p, kPi)),
              1e-9);
    const int n = 64;
    const double h = kPi / n;
    std::vector<double> g(n + 1);
    for (int k = 0; k <= n; ++k) g[k] = g_function(a, p, k * h);
    double min_d2 = std::numeric_limits<double>::infinity();
    for (int k = 1; k < n; ++k) min_d2 = std::min(min_d2, g[k - 1] - 2 * g[k] + g[k + 1]);
    c.at_least(s + " min second difference of G", min_d2, -1e-8);
    RieszFejerSpec spec;
    spec.alpha = alpha;
    spec.p = p;
    TrialOptions o;
    o.trials = 20;
    o.seed = 7;
    const Report r = riesz_fejer_trials(spec, o);
    c.at_least(s + " min margin over 20 trials", r.summary["min_margin"].get<double>(), -1e-8);
  }
}

void criterion11(Criterion& c) {
  VerifyOptions o;
  o.suite = "all";
  o.seed = 7;
  const std::string a = run_verify(o).to_json_text();
  const std::string b = run_verify(o).to_json_text();
  c.holds("verify --suite all --seed 7 byte-identical", a == b);
}

}  // namespace

int main() {
  using Fn = void (*)(Criterion&);
  const std::vector<std::pair<const char*, Fn>> criteria{
      {"special-function anchors", criterion1},
      {"kernel normalization", criterion2},
      {"harmonic reduction", criterion3},
      {"cross-route solver agreement", criterion4},
      {"PDE residual", criterion5},
      {"boundary convergence", criterion6},
      {"jump law", criterion7},
      {"subharmonic radius", criterion8},
      {"hypergeometric subharmonicity and ratio", criterion9},
      {"Riesz-Fejer constant, G and inequality", criterion10},
      {"determinism", criterion11},
  };
  bool all = true;
  int id = 1;
  for (const auto& [title, fn] : criteria) {
    Criterion c(id++, title);
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.holds(std::string("exception: ") + e.what(), false);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = c.finish(secs) && all;
  }
  return all ? 0 : 1;
}
