#pragma once

#include <array>

#include "psiq/seq/ratio_sequence.hpp"
#include "psiq/seq/residual_report.hpp"

namespace psiq::seq {

// x_{n+s} x_{n-s} = z / x_n + a / x_n^2 on the lattice of stride s.
template <class S>
struct Dp1Params {
  S z;
  S a;
};

// x_{m+2} x_{m-1} = a5 / (x_{m+1} x_m) - a4 (1 / x_{m+1} + 1 / x_m)
template <class S>
struct ThirdOrderParams {
  S alpha4;
  S alpha5;
};

// Coefficients of the sixth-order ratio recurrence, all built from
// psi_2 .. psi_6 at a point:
//   A x_{n+3} x_{n-3} = (B x_{n-2} x_{n-1}^2 x_n^3 x_{n+1}^2 x_{n+2}
//                        - C x_{n-1} x_n^2 x_{n+1} + D x_n - E) / Pi_n
// with A = psi_4 psi_2^3, B = psi_5 psi_3 psi_2^2,
// C = psi_5 psi_3^3 - psi_4^3 psi_2, D = psi_6 psi_3^2 psi_2,
// E = psi_6 psi_4 psi_2^2 and
// Pi_n = x_{n-2}^2 x_{n-1}^3 x_n^4 x_{n+1}^3 x_{n+2}^2.
template <class S>
struct SixthOrderParams {
  S A, B, C, D, E;
  static SixthOrderParams from_psi(const S& p2, const S& p3, const S& p4, const S& p5, const S& p6);
};

// Seeds are x_start and x_{start+stride}; values up to index `last`.
// Zero seeds throw DomainError; a vanishing denominator later on records a
// truncation instead.
template <class S>
RatioSequence<S> iterate_dp1(const Dp1Params<S>& params, int start, const std::array<S, 2>& seeds, int last,
                             int stride = 1);

template <class S>
RatioSequence<S> iterate_third_order(const ThirdOrderParams<S>& params, int start, const std::array<S, 3>& seeds,
                                     int last);

// Throws DomainError when A vanishes (psi_4 = 0 at the point).
template <class S>
RatioSequence<S> iterate_sixth_order(const SixthOrderParams<S>& params, int start, const std::array<S, 6>& seeds,
                                     int last);

// Index-wise comparison on the common indices. Exact scalars compare for
// equality; complex ones use |a - b| / max(1, |b|) against `tolerance`.
template <class S>
ResidualReport compare(const RatioSequence<S>& a, const RatioSequence<S>& b, double tolerance = 0.0);

}  // namespace psiq::seq
