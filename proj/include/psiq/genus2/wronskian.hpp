#pragma once

#include <vector>

#include "psiq/algebra/laurent.hpp"
#include "psiq/genus2/basis.hpp"
#include "psiq/genus2/curve.hpp"

namespace psiq::genus2 {

// P_0 .. P_K with d^k y / dx^k = P_k / y^(2k-1):
// P_0 = 1, P_{k+1} = f P_k' - ((2k - 1) / 2) f' P_k.
std::vector<QPoly> derivative_numerators(const QPoly& f, int max_order);

// y^[k] = (d^k y / dx^k) / k! = P_k / (k! y^(2k-1)) for k = 0..max_order.
std::vector<YLaurent> y_derivative_series(const HyperellipticCurve& curve, int max_order);

// y^(n(n-1)/2) det[d^j phi_i / dx^j], j = 1..n-1, over the basis of
// monomial_basis(n), evaluated in R[1/y]. The result always lies in R.
QRingElement psi_wronskian_raw(const HyperellipticCurve& curve, int n);

// Index patterns for the Toeplitz form of the Wronskian, with N = q + 1
// rows and m = p - q + 1. kPure uses y^[m + N - 1 + r - s] everywhere;
// the other two shift one index by +1 in the first column (rows >= 1) or
// in the whole last row.
enum class ToeplitzVariant { kPure, kFirstColumnAdvanced, kLastRowAdvanced };

const char* to_string(ToeplitzVariant v);

struct ToeplitzShape {
  int rows;   // N
  int shift;  // m
};

ToeplitzShape toeplitz_shape(int n);

// Toeplitz determinant of the y^[k] pattern, exact in R[1/y]. Requires n >= 4.
YLaurent toeplitz_determinant(const HyperellipticCurve& curve, int n, ToeplitzVariant variant);

// prod_{j<n} j! * y^(n(n-1)/2) * Toeplitz determinant; comparable with
// psi_wronskian_raw. Returned in R[1/y] because shifted variants need not
// be polynomial.
YLaurent psi_toeplitz_raw(const HyperellipticCurve& curve, int n, ToeplitzVariant variant);

// Raw Wronskian at a point with y0 != 0, as an exact rational.
BigRational psi_wronskian_raw_at(const HyperellipticCurve& curve, int n, const BigRational& x0,
                                 const BigRational& y0);

// prod_{j<n} j! * det[P_k(x0) / k!] over the pure Toeplitz pattern. This is
// the coefficient of the y power left in psi_toeplitz_raw, evaluated at
// any x0 (Weierstrass points included).
BigRational toeplitz_scaled_at(const HyperellipticCurve& curve, int n, const BigRational& x0);

}  // namespace psiq::genus2
