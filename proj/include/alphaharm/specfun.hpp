#pragma once

#include <cstddef>

namespace alphaharm {

// Gamma function for real x away from the poles {0, -1, -2, ...}.
// Relative error below 1e-13 on [-10, 50]. Throws DomainError at a pole.
double gamma_fn(double x);

// log|Γ(x)|; `sign`, when given, receives the sign of Γ(x).
double log_gamma(double x, int* sign = nullptr);

// B(p, q) = Γ(p)Γ(q)/Γ(p+q) for p, q > 0.
double beta_fn(double p, double q);

// Rising factorial (a)_n = a(a+1)...(a+n-1), by recurrence.
double pochhammer(double a, std::size_t n);

struct Hyp2F1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double x = 0.0;
};

// Outcome of a direct ₂F₁ series summation.
struct SeriesAccuracy {
  double value = 0.0;
  std::size_t terms = 0;
  // Heuristic bound on the neglected tail: |last term|·x/(1-x).
  double error_bound = 0.0;
  bool converged = false;
};

inline constexpr std::size_t kHyp2F1MaxTerms = 1'000'000;
inline constexpr double kHyp2F1RelativeStop = 1e-16;

// Direct series with term recurrence. Never throws on slow convergence;
// reports instead. Parameter validation errors still throw.
SeriesAccuracy hyp2f1_report(const Hyp2F1Params& params);

// F(a,b;c;x) for x in [0,1), or x = 1 when c-a-b > 0 (Gauss summation).
// Throws AccuracyError when the series does not settle within the budget.
double hyp2f1(const Hyp2F1Params& params);
double hyp2f1(double a, double b, double c, double x);

// Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b)), requires c-a-b > 0.
double hyp2f1_at_one(double a, double b, double c);

// d/dx F(a,b;c;x) = (ab/c) F(a+1,b+1;c+1;x).
double hyp2f1_derivative(double a, double b, double c, double x);

// (1-x)^{c-a-b} F(c-a,c-b;c;x); reserved for c-a-b < 0.
double euler_transform(double a, double b, double c, double x);

}  // namespace alphaharm
