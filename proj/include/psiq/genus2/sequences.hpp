#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "psiq/genus2/psi_table.hpp"
#include "psiq/seq/iterators.hpp"
#include "psiq/seq/residual_report.hpp"

namespace psiq::genus2 {

// alpha_n, c_n and d_m at a finite Weierstrass point (x0, 0).
//   c_n = alpha_{n+2} alpha_{n-2} / alpha_n^2          (2 <= n, alpha_n != 0)
//   d_m = alpha_{m+1} alpha_{m-2} / (alpha_m alpha_{m-1})  (3 <= m)
struct WeierstrassPointData {
  BigRational x0;
  // alpha[n] for 0 <= n <= last.
  std::vector<BigRational> alpha;
  RatioSequence<BigRational> c;
  RatioSequence<BigRational> d;

  int last() const { return static_cast<int>(alpha.size()) - 1; }
  const BigRational& a(int n) const { return alpha.at(static_cast<std::size_t>(n)); }
};

// Throws DomainError unless f(x0) = 0. alpha_n comes from the scaled
// Toeplitz determinant, so `last` is not bounded by a psi table.
WeierstrassPointData weierstrass_point_data(const HyperellipticCurve& curve, const BigRational& x0, int last);

// alpha_{n+4} alpha_{n-4} - alpha_4^2 alpha_{n+2} alpha_{n-2} + alpha_6 alpha_n^2
ResidualReport weierstrass_bilinear_report(const WeierstrassPointData& w, int n_lo, int n_hi);

// alpha_4 alpha_{n+4} alpha_{n-4} - alpha_5 alpha_{n+3} alpha_{n-3}
//   - alpha_4^3 alpha_{n+2} alpha_{n-2} - alpha_6 alpha_{n+1} alpha_{n-1}
//   + alpha_6 alpha_4 alpha_n^2, evaluated on odd n only.
ResidualReport weierstrass_odd_bilinear_report(const WeierstrassPointData& w, int n_lo, int n_hi);

// z = alpha_4^2, a = -alpha_6 for c on the stride-2 lattices.
seq::Dp1Params<BigRational> weierstrass_dp1_params(const WeierstrassPointData& w);

// c_{n+2} c_{n-2} c_n^2 - z c_n - a
ResidualReport weierstrass_dp1_report(const WeierstrassPointData& w, int n_lo, int n_hi);

seq::ThirdOrderParams<BigRational> third_order_params(const WeierstrassPointData& w);

// d_{m+2} d_{m-1} d_{m+1} d_m - alpha_5 + alpha_4 (d_{m+1} + d_m)
ResidualReport third_order_report(const WeierstrassPointData& w, int m_lo, int m_hi);

// Coefficients of the map (s, p) -> (a0 + a1 s + a3 p) / (a3 + b1 s + b3 p)
// that sends s = d_m + d_{m+1}, p = d_m d_{m+1} to d_{m+2} d_{m-1}.
struct ThirdOrderMap {
  BigRational a0, a1, a3, b1, b3;
};

ThirdOrderMap third_order_map_parameters(const BigRational& alpha4, const BigRational& alpha5);

// Compares the numerator and denominator of the map, as linear forms in
// (1, s, p), with those of the third-order recurrence.
bool third_order_map_matches(const ThirdOrderMap& map, const BigRational& alpha4, const BigRational& alpha5);

// d_m read off psi_{m+1} psi_{m-2} / (psi_m psi_{m-1}) with the common
// (x - x0) factors cancelled, against the alpha route.
ResidualReport d_ratio_equivalence_report(const PsiTable& t, const WeierstrassPointData& w, int m_lo, int m_hi);

// b_n = psi_{n+1} psi_{n-1} / psi_n^2 at a generic point (x0, y0), y0 != 0.
struct GenericPointData {
  BigRational x0, y0;
  // psi[n] for 0 <= n <= last.
  std::vector<BigRational> psi;
  RatioSequence<BigRational> b;
  seq::SixthOrderParams<BigRational> params;
};

GenericPointData generic_point_data(const HyperellipticCurve& curve, const BigRational& x0, const BigRational& y0,
                                    int last);

// A b_{n+3} b_{n-3} Pi_n - B b_{n-2} b_{n-1}^2 b_n^3 b_{n+1}^2 b_{n+2}
//   + C b_{n-1} b_n^2 b_{n+1} - D b_n + E
ResidualReport sixth_order_report(const GenericPointData& g, int n_lo, int n_hi);

// Roots of a rational polynomial by simultaneous (Aberth) iteration.
std::vector<std::complex<double>> polynomial_roots(const QPoly& p, int max_iterations = 500);

struct FourthOrderExploration {
  std::vector<std::complex<double>> roots;
  std::optional<std::complex<double>> point;
  ResidualReport report;
};

// At a complex root of alpha_4, where the sixth-order recurrence degenerates,
// checks the relative residual of
//   B b_{n+2} b_{n-2} - (C b_{n-1} b_n^2 b_{n+1} - D b_n) / (b_{n-1}^2 b_n^3 b_{n+1}^2).
// The psi_n are reduced modulo alpha_4 before evaluation. Never gating.
FourthOrderExploration fourth_order_exploration(const PsiTable& t, int n_lo, int n_hi, double tolerance);

}  // namespace psiq::genus2
