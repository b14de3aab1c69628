#pragma once

#include <stdexcept>
#include <string>

namespace chamanara {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the input was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two irrational operands live in different quadratic fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A square root would leave every supported quadratic field.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

// Direction outside the dyadic family handled by the enumeration code.
class UnsupportedDirection : public Error {
 public:
  using Error::Error;
};

// A geodesic did not reach a singularity within its crossing budget.
class ClosureBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IterationLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace chamanara
