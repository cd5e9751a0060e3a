#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alphaharm/expr.hpp"

namespace alphaharm {

using Complex = std::complex<double>;

struct TrigTerm {
  int n = 0;
  Complex coeff;
};

// An angle as written in a boundary description: either a plain number or a
// constant expression such as "pi/2". The source form is kept for echoing.
struct Angle {
  double value = 0.0;
  std::optional<std::string> source;

  static Angle of(double v) { return Angle{v, std::nullopt}; }
  static Angle parse(std::string_view expr);
};

struct ConstPayload {
  Complex value;
};
struct TrigPolyPayload {
  std::vector<TrigTerm> terms;
};
struct ExprPayload {
  Expression expr;
};

using PiecePayload = std::variant<ConstPayload, TrigPolyPayload, ExprPayload>;

// One arc [theta_start, theta_end) and its continuous value function.
struct Piece {
  Angle theta_start;
  Angle theta_end;
  PiecePayload payload;

  // Value function evaluated at any theta in the closed arc.
  Complex value_at(double theta) const;
  std::string kind() const;
};

// Boundary data on the unit circle: contiguous arcs covering one full turn,
// each with a continuous value function. Values are right-continuous; a
// point where the two adjacent one-sided limits differ is a jump point.
class BoundaryFunction {
 public:
  // Validates contiguity and total span 2π. Throws ArgumentError.
  explicit BoundaryFunction(std::vector<Piece> pieces);

  static BoundaryFunction from_json(const nlohmann::json& doc);
  static BoundaryFunction from_json_text(std::string_view text);

  static BoundaryFunction constant(Complex value);
  static BoundaryFunction trig_poly(std::vector<TrigTerm> terms);
  static BoundaryFunction expression(std::string_view source);
  // `upper` on [θ0, θ0+π), `lower` on [θ0+π, θ0+2π).
  static BoundaryFunction step(double theta0, Complex upper, Complex lower);

  Complex operator()(double theta) const;
  Complex left_limit(double theta) const;
  Complex right_limit(double theta) const;

  // Jump angles, reduced into [period_start, period_start + 2π).
  const std::vector<double>& jump_points() const noexcept { return jumps_; }
  bool has_jumps() const noexcept { return !jumps_.empty(); }
  bool is_jump_point(double theta, double tol = 1e-12) const;

  std::span<const Piece> pieces() const noexcept { return pieces_; }
  double period_start() const noexcept;

  // Reduces theta into [period_start, period_start + 2π).
  double reduce(double theta) const;
  // Index of the arc owning a reduced angle.
  std::size_t owner(double reduced_theta) const;

  // Canonical description; from_json(to_json()) reproduces every double
  // bit for bit and to_json() is idempotent under that round trip.
  nlohmann::json to_json() const;
  std::string dump() const;

 private:
  std::vector<Piece> pieces_;
  std::vector<double> jumps_;
};

// Two-sided truncated coefficient sequence a_n, |n| <= N.
class FourierSpectrum {
 public:
  FourierSpectrum() = default;
  explicit FourierSpectrum(int max_index);
  FourierSpectrum(int max_index, std::vector<Complex> coeffs);

  int max_index() const noexcept { return max_index_; }
  // Zero outside the support.
  Complex operator[](int n) const;
  Complex& at(int n);
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

 private:
  int max_index_ = 0;
  std::vector<Complex> coeffs_{Complex{}};
};

// f(e^{2πik/n}), k = 0..n-1. Requires n >= 4.
std::vector<Complex> sample(const BoundaryFunction& f, std::size_t n_samples);

// a_m = (1/n) Σ_k s_k e^{-2πikm/n}, |m| <= N, by the plain O(n N) sum.
// max_index < 0 selects N = floor(n/2) - 1. Requires n >= 2N + 2.
FourierSpectrum analyze(std::span<const Complex> samples, int max_index = -1);

// Σ a_n e^{inθ}.
Complex synthesize(const FourierSpectrum& spectrum, double theta);

}  // namespace alphaharm
