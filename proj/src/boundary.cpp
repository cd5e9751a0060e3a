#include "alphaharm/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alphaharm/errors.hpp"

namespace alphaharm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kContiguityTol = 1e-12;
constexpr double kSpanTol = 1e-9;

double jump_threshold(Complex a, Complex b) {
  return 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

Complex parse_complex(const nlohmann::json& v, const char* what) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  if (v.is_object() && v.contains("re") && v["re"].is_number()) {
    double im = 0.0;
    if (v.contains("im")) {
      if (!v["im"].is_number()) {
        throw ParseError(std::string(what) + ": 'im' must be a number");
      }
      im = v["im"].get<double>();
    }
    return Complex(v["re"].get<double>(), im);
  }
  throw ParseError(std::string(what) +
                   ": expected a number, [re, im] or {\"re\", \"im\"}");
}

Angle parse_angle(const nlohmann::json& v, const char* field) {
  if (v.is_number()) return Angle::of(v.get<double>());
  if (v.is_string()) return Angle::parse(v.get<std::string>());
  throw ParseError(std::string("piece field '") + field +
                   "' must be a number or a constant expression string");
}

nlohmann::json angle_to_json(const Angle& a) {
  if (a.source) return *a.source;
  return a.value;
}

TrigTerm parse_trig_term(const nlohmann::json& v) {
  if (v.is_object()) {
    if (!v.contains("n") || !v["n"].is_number_integer()) {
      throw ParseError("trig_poly term needs an integer 'n'");
    }
    return TrigTerm{v["n"].get<int>(), parse_complex(v, "trig_poly term")};
  }
  if (v.is_array() && (v.size() == 2 || v.size() == 3) &&
      v[0].is_number_integer()) {
    const double re = v[1].get<double>();
    const double im = v.size() == 3 ? v[2].get<double>() : 0.0;
    return TrigTerm{v[0].get<int>(), Complex(re, im)};
  }
  throw ParseError(
      "trig_poly term must be {\"n\", \"re\", \"im\"} or [n, re, im]");
}

Piece parse_piece(const nlohmann::json& v) {
  if (!v.is_object()) throw ParseError("each piece must be a JSON object");
  for (const char* key : {"theta_start", "theta_end", "kind", "payload"}) {
    if (!v.contains(key)) {
      throw ParseError(std::string("piece is missing '") + key + "'");
    }
  }
  Piece piece{parse_angle(v["theta_start"], "theta_start"),
              parse_angle(v["theta_end"], "theta_end"), ConstPayload{}};
  if (!v["kind"].is_string()) throw ParseError("'kind' must be a string");
  const std::string kind = v["kind"].get<std::string>();
  const auto& payload = v["payload"];
  if (kind == "const") {
    piece.payload = ConstPayload{parse_complex(payload, "const payload")};
  } else if (kind == "trig_poly") {
    if (!payload.is_array()) {
      throw ParseError("trig_poly payload must be a coefficient list");
    }
    TrigPolyPayload tp;
    for (const auto& term : payload) tp.terms.push_back(parse_trig_term(term));
    piece.payload = std::move(tp);
  } else if (kind == "expr") {
    if (!payload.is_string()) {
      throw ParseError("expr payload must be an expression string");
    }
    piece.payload = ExprPayload{Expression::compile(payload.get<std::string>())};
  } else {
    throw ParseError("unknown piece kind '" + kind +
                     "' (expected const, trig_poly or expr)");
  }
  return piece;
}

}  // namespace

Angle Angle::parse(std::string_view expr) {
  return Angle{evaluate_real_constant(expr), std::string(expr)};
}

Complex Piece::value_at(double theta) const {
  return std::visit(
      [theta](const auto& p) -> Complex {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstPayload>) {
          return p.value;
        } else if constexpr (std::is_same_v<T, TrigPolyPayload>) {
          Complex sum;
          for (const auto& t : p.terms) {
            sum += t.coeff * std::polar(1.0, t.n * theta);
          }
          return sum;
        } else {
          return p.expr(theta);
        }
      },
      payload);
}

std::string Piece::kind() const {
  switch (payload.index()) {
    case 0: return "const";
    case 1: return "trig_poly";
    default: return "expr";
  }
}

BoundaryFunction::BoundaryFunction(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw ArgumentError("boundary function needs at least one piece");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (!std::isfinite(p.theta_start.value) ||
        !std::isfinite(p.theta_end.value) ||
        !(p.theta_end.value > p.theta_start.value)) {
      throw ArgumentError("piece " + std::to_string(i) +
                          " needs theta_end > theta_start");
    }
    if (i > 0 && std::fabs(p.theta_start.value -
                           pieces_[i - 1].theta_end.value) > kContiguityTol) {
      throw ArgumentError("pieces must be contiguous: piece " +
                          std::to_string(i) +
                          " does not start where the previous one ends");
    }
  }
  const double span =
      pieces_.back().theta_end.value - pieces_.front().theta_start.value;
  if (std::fabs(span - kTwoPi) > kSpanTol) {
    throw ArgumentError("pieces must cover exactly one turn (2π)");
  }

  const std::size_t count = pieces_.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Piece& here = pieces_[i];
    const Piece& next = pieces_[(i + 1) % count];
    const Complex left = here.value_at(here.theta_end.value);
    const Complex right = next.value_at(next.theta_start.value);
    if (std::abs(left - right) > jump_threshold(left, right)) {
      jumps_.push_back(reduce(next.theta_start.value));
    }
  }
  std::sort(jumps_.begin(), jumps_.end());
}

BoundaryFunction BoundaryFunction::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("pieces") ||
      !doc["pieces"].is_array()) {
    throw ParseError("boundary description must be {\"pieces\": [...]}");
  }
  std::vector<Piece> pieces;
  try {
    for (const auto& p : doc["pieces"]) pieces.push_back(parse_piece(p));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("boundary JSON: ") + e.what());
  }
  return BoundaryFunction(std::move(pieces));
}

BoundaryFunction BoundaryFunction::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("boundary JSON: ") + e.what());
  }
  return from_json(doc);
}

BoundaryFunction BoundaryFunction::constant(Complex value) {
  return BoundaryFunction({Piece{Angle::of(0.0), Angle::of(kTwoPi),
                                 ConstPayload{value}}});
}

BoundaryFunction BoundaryFunction::trig_poly(std::vector<TrigTerm> terms) {
  return BoundaryFunction({Piece{Angle::of(0.0), Angle::of(kTwoPi),
                                 TrigPolyPayload{std::move(terms)}}});
}

BoundaryFunction BoundaryFunction::expression(std::string_view source) {
  return BoundaryFunction({Piece{Angle::of(0.0), Angle::of(kTwoPi),
                                 ExprPayload{Expression::compile(source)}}});
}

BoundaryFunction BoundaryFunction::step(double theta0, Complex upper,
                                        Complex lower) {
  const double mid = theta0 + std::numbers::pi;
  return BoundaryFunction(
      {Piece{Angle::of(theta0), Angle::of(mid), ConstPayload{upper}},
       Piece{Angle::of(mid), Angle::of(theta0 + kTwoPi), ConstPayload{lower}}});
}

double BoundaryFunction::period_start() const noexcept {
  return pieces_.front().theta_start.value;
}

double BoundaryFunction::reduce(double theta) const {
  const double start = period_start();
  double r = std::fmod(theta - start, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return start + r;
}

std::size_t BoundaryFunction::owner(double reduced_theta) const {
  // Last piece whose start is <= theta.
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), reduced_theta,
      [](double t, const Piece& p) { return t < p.theta_start.value; });
  if (it == pieces_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(pieces_.begin(), it)) - 1;
}

Complex BoundaryFunction::operator()(double theta) const {
  const double u = reduce(theta);
  return pieces_[owner(u)].value_at(u);
}

Complex BoundaryFunction::right_limit(double theta) const {
  return (*this)(theta);
}

Complex BoundaryFunction::left_limit(double theta) const {
  const double u = reduce(theta);
  const std::size_t i = owner(u);
  if (std::fabs(u - pieces_[i].theta_start.value) <= kContiguityTol) {
    const std::size_t prev = (i + pieces_.size() - 1) % pieces_.size();
    return pieces_[prev].value_at(pieces_[prev].theta_end.value);
  }
  return pieces_[i].value_at(u);
}

bool BoundaryFunction::is_jump_point(double theta, double tol) const {
  const double u = reduce(theta);
  for (double j : jumps_) {
    double d = std::fabs(u - j);
    d = std::min(d, kTwoPi - d);
    if (d <= tol) return true;
  }
  return false;
}

nlohmann::json BoundaryFunction::to_json() const {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : pieces_) {
    nlohmann::json payload;
    std::visit(
        [&payload](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, ConstPayload>) {
            payload = {{"re", v.value.real()}, {"im", v.value.imag()}};
          } else if constexpr (std::is_same_v<T, TrigPolyPayload>) {
            payload = nlohmann::json::array();
            for (const auto& t : v.terms) {
              payload.push_back(
                  {{"n", t.n}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
            }
          } else {
            payload = v.expr.source();
          }
        },
        p.payload);
    pieces.push_back({{"theta_start", angle_to_json(p.theta_start)},
                      {"theta_end", angle_to_json(p.theta_end)},
                      {"kind", p.kind()},
                      {"payload", std::move(payload)}});
  }
  return {{"pieces", std::move(pieces)}};
}

std::string BoundaryFunction::dump() const { return to_json().dump(); }

FourierSpectrum::FourierSpectrum(int max_index)
    : max_index_(max_index),
      coeffs_(static_cast<std::size_t>(2 * max_index + 1)) {
  if (max_index < 0) throw ArgumentError("max_index must be >= 0");
}

FourierSpectrum::FourierSpectrum(int max_index, std::vector<Complex> coeffs)
    : max_index_(max_index), coeffs_(std::move(coeffs)) {
  if (max_index < 0 ||
      coeffs_.size() != static_cast<std::size_t>(2 * max_index + 1)) {
    throw ArgumentError("spectrum needs 2N+1 coefficients");
  }
}

Complex FourierSpectrum::operator[](int n) const {
  if (n < -max_index_ || n > max_index_) return {};
  return coeffs_[static_cast<std::size_t>(n + max_index_)];
}

Complex& FourierSpectrum::at(int n) {
  if (n < -max_index_ || n > max_index_) {
    throw ArgumentError("spectrum index out of range");
  }
  return coeffs_[static_cast<std::size_t>(n + max_index_)];
}

std::vector<Complex> sample(const BoundaryFunction& f, std::size_t n_samples) {
  if (n_samples < 4) throw ArgumentError("sample: n_samples must be >= 4");
  std::vector<Complex> out(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    out[k] = f(kTwoPi * static_cast<double>(k) /
               static_cast<double>(n_samples));
  }
  return out;
}

FourierSpectrum analyze(std::span<const Complex> samples, int max_index) {
  const auto n = static_cast<long long>(samples.size());
  if (n < 2) throw ArgumentError("analyze: need at least 2 samples");
  const int limit = static_cast<int>(n / 2 - 1);
  const int N = max_index < 0 ? limit : max_index;
  if (n < 2LL * N + 2) {
    throw ArgumentError("analyze: " + std::to_string(n) +
                        " samples cannot resolve max_index " +
                        std::to_string(N) + " (need n >= 2N+2)");
  }
  std::vector<Complex> twiddle(static_cast<std::size_t>(n));
  for (long long j = 0; j < n; ++j) {
    twiddle[static_cast<std::size_t>(j)] =
        std::polar(1.0, -kTwoPi * static_cast<double>(j) /
                            static_cast<double>(n));
  }
  FourierSpectrum spec(N);
  for (int m = -N; m <= N; ++m) {
    const long long step = ((m % n) + n) % n;
    Complex sum;
    long long idx = 0;
    for (long long k = 0; k < n; ++k) {
      sum += samples[static_cast<std::size_t>(k)] *
             twiddle[static_cast<std::size_t>(idx)];
      idx += step;
      if (idx >= n) idx -= n;
    }
    spec.at(m) = sum / static_cast<double>(n);
  }
  return spec;
}

Complex synthesize(const FourierSpectrum& spectrum, double theta) {
  Complex sum;
  const int N = spectrum.max_index();
  for (int n = -N; n <= N; ++n) {
    sum += spectrum[n] * std::polar(1.0, n * theta);
  }
  return sum;
}

}  // namespace alphaharm
