#pragma once

#include <stdexcept>
#include <string>

namespace psiq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: rationals, curve documents, lattice strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (bad index, singular curve, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Division by zero or a division that was required to be exact but is not.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Operands live in different quotient rings.
class CurveMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace psiq
