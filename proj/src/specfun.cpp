#include "alphaharm/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "alphaharm/errors.hpp"

namespace alphaharm {
namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// sin(πx) with exact zeros at the integers.
double sin_pi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(std::numbers::pi * r);
}

double lanczos_sum(double z) {
  double sum = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    sum += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  }
  return sum;
}

// Γ(x) for x >= 0.5.
double gamma_positive(double x) {
  if (x == std::floor(x) && x <= 171.0) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power so t^{z+1/2} does not overflow before e^{-t} scales it.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) *
         lanczos_sum(z);
}

// log Γ(x) for x >= 0.5.
double log_gamma_positive(double x) {
  if (x == 1.0 || x == 2.0) return 0.0;
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

// 1/Γ(x), zero at the poles.
double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma_fn(x);
}

std::string describe(const Hyp2F1Params& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(a=" << p.a << ", b=" << p.b << ", c=" << p.c << ", x=" << p.x
     << ")";
  return os.str();
}

void validate_c(double c) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("hyp2f1: c must not be a non-positive integer");
  }
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
  if (is_nonpositive_integer(x)) {
    throw DomainError("gamma_fn: pole at non-positive integer");
  }
  if (x < 0.5) {
    // Reflection: Γ(x)Γ(1-x) = π / sin(πx).
    return std::numbers::pi / (sin_pi(x) * gamma_positive(1.0 - x));
  }
  return gamma_positive(x);
}

double log_gamma(double x, int* sign) {
  if (std::isnan(x)) throw DomainError("log_gamma: NaN argument");
  if (is_nonpositive_integer(x)) {
    throw DomainError("log_gamma: pole at non-positive integer");
  }
  if (x < 0.5) {
    const double s = sin_pi(x);
    if (sign != nullptr) *sign = s < 0.0 ? -1 : 1;
    return std::log(std::numbers::pi) - std::log(std::fabs(s)) -
           log_gamma_positive(1.0 - x);
  }
  if (sign != nullptr) *sign = 1;
  return log_gamma_positive(x);
}

double beta_fn(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) {
    throw DomainError("beta_fn: arguments must be positive");
  }
  if (p + q < 140.0) {
    return gamma_fn(p) * gamma_fn(q) / gamma_fn(p + q);
  }
  return std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

double pochhammer(double a, std::size_t n) {
  double result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    result *= a + static_cast<double>(k);
  }
  return result;
}

SeriesAccuracy hyp2f1_report(const Hyp2F1Params& params) {
  const auto [a, b, c, x] = params;
  validate_c(c);
  if (std::isnan(x) || x < 0.0 || x > 1.0) {
    throw DomainError("hyp2f1: x must lie in [0, 1], got " +
                      describe(params));
  }
  if (x == 1.0) {
    return SeriesAccuracy{hyp2f1_at_one(a, b, c), 0, 0.0, true};
  }

  SeriesAccuracy out;
  double term = 1.0;
  double sum = 1.0;
  std::size_t n = 0;
  for (; n < kHyp2F1MaxTerms; ++n) {
    const double k = static_cast<double>(n);
    const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0));
    term *= ratio * x;
    sum += term;
    if (term == 0.0) {
      out.converged = true;
      break;
    }
    if (std::fabs(ratio * x) < 1.0 &&
        std::fabs(term) <= kHyp2F1RelativeStop * std::fabs(sum)) {
      out.converged = true;
      break;
    }
  }
  out.value = sum;
  out.terms = n + 1;
  out.error_bound = x > 0.0 ? std::fabs(term) * x / (1.0 - x) : 0.0;
  return out;
}

double hyp2f1(const Hyp2F1Params& params) {
  const SeriesAccuracy r = hyp2f1_report(params);
  if (!r.converged) {
    throw AccuracyError("hyp2f1: series did not converge within " +
                            std::to_string(kHyp2F1MaxTerms) + " terms for " +
                            describe(params),
                        r.value, r.error_bound, r.terms);
  }
  return r.value;
}

double hyp2f1(double a, double b, double c, double x) {
  return hyp2f1(Hyp2F1Params{a, b, c, x});
}

double hyp2f1_at_one(double a, double b, double c) {
  validate_c(c);
  const double s = c - a - b;
  if (!(s > 0.0)) {
    throw DomainError("hyp2f1_at_one: requires c - a - b > 0");
  }
  const double ca = c - a;
  const double cb = c - b;
  if (is_nonpositive_integer(ca) || is_nonpositive_integer(cb)) return 0.0;
  const double largest = std::fmax(std::fmax(c, s), std::fmax(ca, cb));
  if (largest < 140.0) {
    return gamma_fn(c) * gamma_fn(s) * reciprocal_gamma(ca) *
           reciprocal_gamma(cb);
  }
  int s1 = 1, s2 = 1, s3 = 1, s4 = 1;
  const double log_value = log_gamma(c, &s1) + log_gamma(s, &s2) -
                           log_gamma(ca, &s3) - log_gamma(cb, &s4);
  return static_cast<double>(s1 * s2 * s3 * s4) * std::exp(log_value);
}

double hyp2f1_derivative(double a, double b, double c, double x) {
  validate_c(c);
  const double scale = a * b / c;
  if (scale == 0.0) {
    // Still validate the argument range.
    if (std::isnan(x) || x < 0.0 || x > 1.0) {
      throw DomainError("hyp2f1_derivative: x must lie in [0, 1]");
    }
    return 0.0;
  }
  return scale * hyp2f1(a + 1.0, b + 1.0, c + 1.0, x);
}

double euler_transform(double a, double b, double c, double x) {
  validate_c(c);
  const double s = c - a - b;
  if (!(s < 0.0)) {
    throw DomainError("euler_transform: reserved for c - a - b < 0");
  }
  if (std::isnan(x) || x < 0.0 || x >= 1.0) {
    throw DomainError("euler_transform: x must lie in [0, 1)");
  }
  return std::pow(1.0 - x, s) * hyp2f1(c - a, c - b, c, x);
}

}  // namespace alphaharm
