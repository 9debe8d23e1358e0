#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psiq/algebra/scalar.hpp"
#include "psiq/errors.hpp"

namespace psiq {

// Dense univariate polynomial, coefficients stored lowest degree first and
// always trimmed so that the leading coefficient is nonzero.
template <class S>
class Polynomial {
 public:
  using Scalar = S;
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<S> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<S> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(S value) { return Polynomial(std::vector<S>{std::move(value)}); }
  static Polynomial monomial(S value, int degree);
  static Polynomial x() { return monomial(S(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const S> coefficients() const { return c_; }
  // Coefficient of x^k, zero beyond the stored range.
  S coefficient(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : S(0); }
  const S& leading() const;

  template <class T>
  T evaluate(const T& point) const;
  S operator()(const S& point) const { return evaluate(point); }

  Polynomial derivative() const;
  Polynomial scaled(const S& factor) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(const S& s, const Polynomial& p) { return p.scaled(s); }
  friend Polynomial operator*(const Polynomial& p, const S& s) { return p.scaled(s); }
  friend Polynomial operator-(const Polynomial& p) { return p.scaled(S(-1)); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& variable = "x") const;

  static Polynomial multiply(const Polynomial& a, const Polynomial& b);

 private:
  void trim() {
    while (!c_.empty() && ScalarTraits<S>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
struct DivisionResult {
  Polynomial<S> quotient;
  Polynomial<S> remainder;
};

template <class S>
DivisionResult<S> divmod(const Polynomial<S>& dividend, const Polynomial<S>& divisor);

// Quotient when the division leaves no remainder. Exact scalars throw
// ArithmeticError otherwise; floating scalars accept a remainder that is
// negligible relative to the dividend.
template <class S>
Polynomial<S> exact_div(const Polynomial<S>& dividend, const Polynomial<S>& divisor);

template <class S>
bool divides(const Polynomial<S>& divisor, const Polynomial<S>& dividend);

// Monic greatest common divisor (zero if both inputs are zero).
Polynomial<BigRational> gcd(Polynomial<BigRational> a, Polynomial<BigRational> b);

// Largest absolute coefficient; a cheap scalar summary of a residual.
template <class S>
double max_abs_coefficient(const Polynomial<S>& p);

// Inverse of a modulo `modulus`, or nullopt when they share a factor.
std::optional<Polynomial<BigRational>> inverse_mod(const Polynomial<BigRational>& a,
                                                   const Polynomial<BigRational>& modulus);

BigRational height(const Polynomial<BigRational>& p);

Polynomial<Complex> to_complex(const Polynomial<BigRational>& p);

using QPoly = Polynomial<BigRational>;
using CPoly = Polynomial<Complex>;

template <class S>
inline bool is_zero(const Polynomial<S>& p) {
  return p.is_zero();
}

template <class S>
template <class T>
T Polynomial<S>::evaluate(const T& point) const {
  T acc = T(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    if constexpr (std::is_same_v<T, S>) {
      acc = acc * point + c_[i];
    } else {
      acc = acc * point + T(ScalarTraits<S>::to_complex(c_[i]));
    }
  }
  return acc;
}

template <>
Polynomial<BigRational> Polynomial<BigRational>::multiply(const Polynomial&, const Polynomial&);
template <>
Polynomial<Complex> Polynomial<Complex>::multiply(const Polynomial&, const Polynomial&);

extern template class Polynomial<BigRational>;
extern template class Polynomial<Complex>;

}  // namespace psiq
