#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>

namespace alphaharm {

// A compiled complex-valued expression in one real variable (`t` or
// `theta`). Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' unary)?
//   atom   := number | 'pi' | 'e' | 'i' | 't' | 'theta'
//           | fn '(' expr ')' | '(' expr ')'
// fn is one of sin cos tan exp log sqrt abs re im conj sinh cosh tanh.
class Expression {
 public:
  // Throws ParseError with the offending column on malformed input.
  static Expression compile(std::string_view source);

  std::complex<double> operator()(double t) const;
  const std::string& source() const noexcept { return source_; }

  struct Node;

 private:
  Expression(std::string source, std::shared_ptr<const Node> root);

  std::string source_;
  std::shared_ptr<const Node> root_;
};

// Evaluates an expression with no free variable to a finite real number.
// Used for angle fields such as "2*pi". Throws ParseError otherwise.
double evaluate_real_constant(std::string_view source);

}  // namespace alphaharm
