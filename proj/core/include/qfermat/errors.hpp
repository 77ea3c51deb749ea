#pragma once

#include <stdexcept>
#include <string>

namespace qfermat {

/// Malformed or invalid user input (parameter files, expressions, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request that is well formed but too large to compute at desk scale.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different cyclotomic fields, or polynomials in different algebras.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

}  // namespace qfermat
