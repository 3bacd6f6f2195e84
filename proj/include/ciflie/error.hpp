#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ciflie {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain (non-prime modulus, degree outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Two CIF sets (or a set and a map) live on different superalgebras.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Amplitudes of membership and non-membership sum to more than one.
class BudgetViolation : public Error {
 public:
  using Error::Error;
};

/// A table disagrees with the convention lambda(0) = TOP, rho(0) = BOTTOM.
class ZeroPinViolation : public Error {
 public:
  using Error::Error;
};

class CarrierTooLarge : public Error {
 public:
  using Error::Error;
};

class NotGraded : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

/// Spec-file error with 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace ciflie
