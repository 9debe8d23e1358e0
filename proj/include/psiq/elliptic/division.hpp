#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "psiq/elliptic/curve.hpp"
#include "psiq/seq/ratio_sequence.hpp"

namespace psiq::elliptic {

// Division polynomials psi_n with x = wp(u), y = wp'(u): psi_1 = 1,
// psi_2 = -y, psi_3, psi_4 closed form, the rest from the addition
// recursion. psi_0 = 0 and psi_{-n} = -psi_n. Entries are memoised and
// the table may be shared between threads.
template <class S>
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(WeierstrassCurve<S> curve);

  const WeierstrassCurve<S>& curve() const { return curve_; }
  RingElement<S> psi(int n) const;

 private:
  const RingElement<S>& ensure(int n) const;
  WeierstrassCurve<S> curve_;
  mutable std::mutex mutex_;
  mutable std::vector<RingElement<S>> table_;
};

// k-th derivative of wp as a ring element: wp, y, 6x^2 - g2/2, 12xy, ...
template <class S>
RingElement<S> wp_derivative(const WeierstrassCurve<S>& curve, int k);

// d/du with dx/du = y and dy/du = 6x^2 - g2/2.
template <class S>
RingElement<S> derivation(const WeierstrassCurve<S>& curve, const RingElement<S>& e);

// (n-1)x(n-1) Hankel determinant of wp^(i+j-1), i, j = 1..n-1.
QRingElement kiepert_determinant(const RationalCurve& curve, int n);

// s with a == s * b, if such a rational exists.
std::optional<BigRational> proportionality(const QRingElement& a, const QRingElement& b);

// psi_{m+n} psi_{m-n} psi_1^2 - det[[psi_{m+1} psi_{m-1}, psi_m^2],
//                                    [psi_{n+1} psi_{n-1}, psi_n^2]]
QRingElement addition_recursion_residual(const DivisionPolynomials<BigRational>& table, int m, int n);

// psi_{n+2} psi_{n-2} psi_1^2 - psi_{n+1} psi_{n-1} psi_2^2 + psi_3 psi_1 psi_n^2
QRingElement bilinear_residual(const DivisionPolynomials<BigRational>& table, int n);

// beta_{n+1} beta_{n-1} - z / beta_n - a / beta_n^2 with beta_n =
// psi_{n+1} psi_{n-1} / psi_n^2, z = psi_2^2, a = -psi_3 psi_1, after
// multiplying through by psi_{n+1}^2 psi_{n-1}^2.
QRingElement dp1_form_residual(const DivisionPolynomials<BigRational>& table, int n);

struct Dp1Parameters {
  BigRational z;
  BigRational a;
};

// z = psi_2(P)^2 and a = -psi_3(P) psi_1(P) at a rational point.
Dp1Parameters dp1_parameters(const DivisionPolynomials<BigRational>& table, const BigRational& x0, const BigRational& y0);

// beta_first .. beta_last evaluated at a rational point. Stops with a
// recorded truncation at the first index whose denominator vanishes.
RatioSequence<BigRational> beta_at_point(const DivisionPolynomials<BigRational>& table, const BigRational& x0,
                                         const BigRational& y0, int first, int last);

extern template class DivisionPolynomials<BigRational>;
extern template class DivisionPolynomials<Complex>;

}  // namespace psiq::elliptic
