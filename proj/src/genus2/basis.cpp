#include "psiq/genus2/basis.hpp"

#include "psiq/errors.hpp"

namespace psiq::genus2 {

std::string Monomial::to_string() const {
  std::string s;
  if (x_power == 1) s = "x";
  if (x_power > 1) s = "x^" + std::to_string(x_power);
  if (has_y) s += s.empty() ? "y" : "*y";
  return s.empty() ? "1" : s;
}

int MonomialBasis::y_columns() const {
  int c = 0;
  for (const auto& m : monomials) c += m.has_y ? 1 : 0;
  return c;
}

int MonomialBasis::weight_order_sign() const {
  int sign = 1;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = i + 1; j < monomials.size(); ++j)
      if (monomials[i].weight() > monomials[j].weight()) sign = -sign;
  return sign;
}

MonomialBasis monomial_basis(int n) {
  if (n < 2) throw DomainError("monomial basis needs n >= 2");
  MonomialBasis b;
  b.n = n;
  if (n <= 3) {
    b.p = n - 1;
    for (int a = 1; a < n; ++a) b.monomials.push_back({a, false});
    return b;
  }
  b.p = (n + 1) / 2;
  b.q = (n - 4) / 2;
  for (int a = 1; a <= b.p; ++a) b.monomials.push_back({a, false});
  for (int a = 0; a <= b.q; ++a) b.monomials.push_back({a, true});
  return b;
}

}  // namespace psiq::genus2
