#pragma once

#include <stdexcept>
#include <string>

namespace projgraft {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by malformed or out-of-contract input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Errors caused by a well-formed request that the theory forbids (CLI exit code 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public InputError {
 public:
  ArithmeticOverflow() : InputError("integer overflow in exact curve arithmetic") {}
};

class ZeroTwister : public InputError {
 public:
  ZeroTwister() : InputError("cannot twist about the empty class (0,0)") {}
};

class NonPrimitive : public InputError {
 public:
  using InputError::InputError;
};

class DegeneratePosition : public InputError {
 public:
  using InputError::InputError;
};

class BadIntersectionPattern : public InputError {
 public:
  using InputError::InputError;
};

class BadConfiguration : public InputError {
 public:
  using InputError::InputError;
};

class UnknownChart : public InputError {
 public:
  explicit UnknownChart(const std::string& name) : InputError("unknown chart '" + name + "'") {}
};

class UnknownSuite : public InputError {
 public:
  explicit UnknownSuite(const std::string& name) : InputError("unknown verification suite '" + name + "'") {}
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class NotAdmissible : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonSpiralingCurve : public DomainError {
 public:
  using DomainError::DomainError;
};

class OddMultiplicity : public DomainError {
 public:
  explicit OddMultiplicity(const std::string& component)
      : DomainError("odd multiplicity on component " + component), component_(component) {}
  const std::string& component() const noexcept { return component_; }

 private:
  std::string component_;
};

}  // namespace projgraft
