#pragma once

#include <stdexcept>
#include <string>

namespace qcl {

/// Base of every error raised by the kernel. The C API maps each subclass to
/// its own status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A specialization hit a vanishing denominator. `guard()` names the factor,
/// e.g. "1+q=0".
class GuardFailure : public Error {
 public:
  explicit GuardFailure(std::string guard)
      : Error("denominator vanishes: " + guard), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A value expected to lie in a span did not (closure failure, non-scalar
/// action, and similar structural violations).
class NotInSpan : public Error {
 public:
  using Error::Error;
};

}  // namespace qcl
