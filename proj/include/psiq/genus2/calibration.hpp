#pragma once

#include <string>
#include <vector>

#include "psiq/algebra/binomial_system.hpp"
#include "psiq/genus2/wronskian.hpp"

namespace psiq::genus2 {

// Smallest table size whose 3x3 recursion pairs pin down every scale factor.
inline constexpr int kMinCalibrationHorizon = 9;

struct CalibrationPair {
  int m = 0;
  int n = 0;
  // Distinct scale monomials with a nonzero coefficient.
  std::size_t groups = 0;
  // Dimension of the coefficient kernel; 1 for an informative pair.
  std::size_t nullity = 0;
  // "used", "trivial" (identically zero), "ambiguous" or "inconsistent".
  std::string status;
};

// psi_n = kappa_n * psi_wronskian_raw(n), with psi_2 = 2y imposed and the
// remaining scales solved from the 3x3 recursion
//   psi_2^2 psi_m psi_n psi_{m+n} psi_{m-n} = det[psi_{m-2+r+s} psi_{n-r+s}]
// over all 3 <= n, n + 2 <= m, m + n <= horizon. The recursion is
// invariant under psi_k -> c^(k^2 - 4) psi_k, so psi_2 alone leaves one
// free scale; `gauge_dimension` reports it and psi_3 = 8 y^3 fixes it.
struct Calibration {
  int horizon = 0;
  // kappa[n] for 2 <= n <= horizon; entries 0 and 1 are unused.
  std::vector<BigRational> kappa;
  std::size_t gauge_dimension = 0;
  BinomialStatus status_psi2_only = BinomialStatus::kInconsistent;
  BinomialStatus status = BinomialStatus::kInconsistent;
  std::vector<CalibrationPair> pairs;
  std::vector<std::string> conflicts;
  // Every recursion pair vanishes exactly with the solved scales.
  bool verified = false;

  bool ok() const { return status == BinomialStatus::kUnique && verified; }
};

// Raw table indexed 0..horizon (entries 0 and 1 ignored).
Calibration calibrate_raw(const std::vector<QRingElement>& raw, int horizon);

// Builds raw Wronskians up to max(n_max, kMinCalibrationHorizon) and calibrates.
Calibration calibrate(const HyperellipticCurve& curve, int n_max);

// sign * 2^(n(n-1)/2) / prod_{j<n} j!, sign from weight_order_sign(n). The
// calibrated scales agree with it wherever both are available; it extends
// pointwise evaluation past the calibrated horizon.
BigRational kappa_closed_form(int n);

}  // namespace psiq::genus2
