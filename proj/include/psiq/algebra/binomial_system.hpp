#pragma once

#include <optional>
#include <vector>

#include "psiq/algebra/rational.hpp"

namespace psiq {

// prod_i x_i^exponents[i] = value, value nonzero.
struct BinomialEquation {
  std::vector<long> exponents;
  BigRational value;
};

enum class BinomialStatus { kUnique, kMultiple, kUnderdetermined, kInconsistent };

const char* to_string(BinomialStatus s);

struct BinomialSolution {
  BinomialStatus status = BinomialStatus::kInconsistent;
  // Value of each variable shared by every rational solution, if any.
  std::vector<std::optional<BigRational>> values;
  std::vector<std::size_t> free_variables;
  // All rational solutions found (complete assignments only).
  std::vector<std::vector<BigRational>> solutions;
};

// Rational solutions of a system of binomial equations in nonzero unknowns.
// Integer elimination on the exponent matrix mirrors multiplicative
// elimination on the values; exact roots are taken during back substitution
// with both signs explored for even degrees, and every candidate is checked
// against the original equations.
BinomialSolution solve_binomial_system(const std::vector<BinomialEquation>& equations, std::size_t variables);

}  // namespace psiq
