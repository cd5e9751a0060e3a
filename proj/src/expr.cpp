#include "alphaharm/expr.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "alphaharm/errors.hpp"

namespace alphaharm {

using Cx = std::complex<double>;

struct Expression::Node {
  enum class Kind { kNumber, kVariable, kUnary, kBinary, kCall };
  Kind kind = Kind::kNumber;
  Cx number;
  char op = 0;
  std::string fn;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

Cx integer_power(Cx base, long long n) {
  bool invert = n < 0;
  unsigned long long m = invert ? static_cast<unsigned long long>(-n)
                                : static_cast<unsigned long long>(n);
  Cx result(1.0, 0.0);
  while (m != 0) {
    if (m & 1ULL) result *= base;
    base *= base;
    m >>= 1;
  }
  return invert ? Cx(1.0, 0.0) / result : result;
}

Cx apply_binary(char op, Cx a, Cx b) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    case '^':
      if (b.imag() == 0.0 && b.real() == std::floor(b.real()) &&
          std::fabs(b.real()) <= 1024.0) {
        return integer_power(a, static_cast<long long>(b.real()));
      }
      if (a.imag() == 0.0 && a.real() >= 0.0 && b.imag() == 0.0) {
        return Cx(std::pow(a.real(), b.real()), 0.0);
      }
      return std::pow(a, b);
  }
  return {};
}

Cx apply_call(const std::string& fn, Cx v) {
  if (fn == "sin") return std::sin(v);
  if (fn == "cos") return std::cos(v);
  if (fn == "tan") return std::tan(v);
  if (fn == "exp") return std::exp(v);
  if (fn == "log") return std::log(v);
  if (fn == "sqrt") return std::sqrt(v);
  if (fn == "abs") return Cx(std::abs(v), 0.0);
  if (fn == "re") return Cx(v.real(), 0.0);
  if (fn == "im") return Cx(v.imag(), 0.0);
  if (fn == "conj") return std::conj(v);
  if (fn == "sinh") return std::sinh(v);
  if (fn == "cosh") return std::cosh(v);
  return std::tanh(v);
}

bool known_function(std::string_view name) {
  static constexpr std::string_view kNames[] = {
      "sin", "cos", "tan", "exp",  "log",  "sqrt", "abs",
      "re",  "im",  "conj", "sinh", "cosh", "tanh"};
  for (auto n : kNames) {
    if (n == name) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return root;
  }

  bool uses_variable() const { return uses_variable_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression '" + std::string(src_) + "': " + msg +
                     " at column " + std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::kBinary;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (consume('+')) {
        lhs = make_binary('+', lhs, term());
      } else if (consume('-')) {
        lhs = make_binary('-', lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (consume('*')) {
        lhs = make_binary('*', lhs, unary());
      } else if (consume('/')) {
        lhs = make_binary('/', lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (consume('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::kUnary;
      n->op = '-';
      n->lhs = unary();
      return n;
    }
    if (consume('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (consume('^')) return make_binary('^', base, unary());
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t begin = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(src_.substr(begin, pos_ - begin));
      auto n = std::make_shared<Node>();
      if (name == "t" || name == "theta") {
        uses_variable_ = true;
        n->kind = Node::Kind::kVariable;
        return n;
      }
      if (name == "pi") {
        n->number = Cx(std::numbers::pi, 0.0);
        return n;
      }
      if (name == "e") {
        n->number = Cx(std::numbers::e, 0.0);
        return n;
      }
      if (name == "i") {
        n->number = Cx(0.0, 1.0);
        return n;
      }
      if (known_function(name)) {
        if (!consume('(')) fail("expected '(' after " + name);
        n->kind = Node::Kind::kCall;
        n->fn = name;
        n->lhs = expr();
        if (!consume(')')) fail("expected ')'");
        return n;
      }
      pos_ = begin;
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    auto n = std::make_shared<Node>();
    n->number = Cx(value, 0.0);
    return n;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  bool uses_variable_ = false;
};

Cx evaluate(const Node& n, double t) {
  switch (n.kind) {
    case Node::Kind::kNumber: return n.number;
    case Node::Kind::kVariable: return Cx(t, 0.0);
    case Node::Kind::kUnary: return -evaluate(*n.lhs, t);
    case Node::Kind::kBinary:
      return apply_binary(n.op, evaluate(*n.lhs, t), evaluate(*n.rhs, t));
    case Node::Kind::kCall: return apply_call(n.fn, evaluate(*n.lhs, t));
  }
  return {};
}

}  // namespace

Expression::Expression(std::string source, std::shared_ptr<const Node> root)
    : source_(std::move(source)), root_(std::move(root)) {}

Expression Expression::compile(std::string_view source) {
  Parser parser(source);
  NodePtr root = parser.parse();
  return Expression(std::string(source), std::move(root));
}

std::complex<double> Expression::operator()(double t) const {
  return evaluate(*root_, t);
}

double evaluate_real_constant(std::string_view source) {
  Parser parser(source);
  NodePtr root = parser.parse();
  if (parser.uses_variable()) {
    throw ParseError("constant expression '" + std::string(source) +
                     "' must not reference t");
  }
  const Cx v = evaluate(*root, 0.0);
  if (v.imag() != 0.0 || !std::isfinite(v.real())) {
    throw ParseError("constant expression '" + std::string(source) +
                     "' is not a finite real number");
  }
  return v.real();
}

}  // namespace alphaharm
