#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text or corpus line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based corpus line, or 0 when parsing a standalone string.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input outside an operation's mathematical domain (e.g. a disconnected
/// graph handed to a distance computation, or a set that is not a twin set).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Family parameters violate the family's size/divisibility constraint.
class ConstraintError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Order outside a supported or theorem-stated range.
class OrderRangeError : public Error {
 public:
  using Error::Error;
};

/// A graph stream does not cover every connected graph of its order.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace dlspec
