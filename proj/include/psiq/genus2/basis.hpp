#pragma once

#include <string>
#include <vector>

namespace psiq::genus2 {

// x^x_power * y^(has_y ? 1 : 0)
struct Monomial {
  int x_power = 0;
  bool has_y = false;
  // Pole order at infinity: x has weight 2 and y weight 5.
  int weight() const { return 2 * x_power + (has_y ? 5 : 0); }
  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Functions whose Wronskian defines psi_n. For n <= 3 the basis is
// x, ..., x^(n-1); otherwise p = floor((n+1)/2), q = floor((n-4)/2) and the
// basis is x, ..., x^p, y, x y, ..., x^q y. For n <= 3, p = n - 1 and q = -1.
struct MonomialBasis {
  int n = 0;
  int p = -1;
  int q = -1;
  std::vector<Monomial> monomials;

  int y_columns() const;
  // Sign of the permutation sorting the basis by pole weight.
  int weight_order_sign() const;
};

MonomialBasis monomial_basis(int n);

}  // namespace psiq::genus2
