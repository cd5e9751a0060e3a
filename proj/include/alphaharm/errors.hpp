#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphaharm {

enum class ErrorKind {
  kDomain,
  kArgument,
  kAccuracy,
  kPrecondition,
  kParse,
};

// Base of every exception thrown by the library. The C API maps kind() onto
// ah_status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what)
      : Error(ErrorKind::kArgument, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::kPrecondition, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorKind::kParse, what) {}
};

// A series that did not meet its stopping criterion within the term budget.
// Carries what was accumulated so the caller can decide whether to use it.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double partial_sum,
                double error_bound, std::size_t terms)
      : Error(ErrorKind::kAccuracy, what),
        partial_sum_(partial_sum),
        error_bound_(error_bound),
        terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  double error_bound() const noexcept { return error_bound_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  double partial_sum_;
  double error_bound_;
  std::size_t terms_;
};

}  // namespace alphaharm
