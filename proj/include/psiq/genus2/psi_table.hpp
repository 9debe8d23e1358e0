#pragma once

#include <vector>

#include "psiq/genus2/calibration.hpp"

namespace psiq::genus2 {

// Calibrated psi_n for |n| <= size(), with psi_0 = psi_1 = 0 and
// psi_{-n} = -psi_n. Immutable once built.
class PsiTable {
 public:
  // Table up to max(n_max, kMinCalibrationHorizon). Throws DomainError if the
  // calibration is not unique or fails verification.
  static PsiTable build(const HyperellipticCurve& curve, int n_max);

  const HyperellipticCurve& curve() const { return curve_; }
  const Calibration& calibration() const { return calibration_; }
  int size() const { return static_cast<int>(psi_.size()) - 1; }
  const QRingElement& psi(int n) const;
  QRingElement signed_psi(int n) const;
  // psi_n = 2 y alpha_n for even n and 8 y^3 alpha_n for odd n.
  const QPoly& alpha(int n) const;
  BigRational alpha_at(int n, const BigRational& x0) const;

 private:
  PsiTable(HyperellipticCurve curve, Calibration cal, std::vector<QRingElement> psi);
  HyperellipticCurve curve_;
  Calibration calibration_;
  std::vector<QRingElement> psi_;
  std::vector<QPoly> alpha_;
};

// The polynomial alpha_n of a psi_n of index n. Throws ArithmeticError if
// psi_n lacks the y or y^3 factor its parity requires.
QPoly alpha_of(const QRingElement& psi, int n);

// alpha_n(x0) for any n >= 2 through the scaled Toeplitz determinant, with
// kappa_closed_form for the scale.
BigRational alpha_value(const HyperellipticCurve& curve, int n, const BigRational& x0);

// psi_n(x0, y0), y0 != 0, through the pointwise Wronskian and
// kappa_closed_form.
BigRational psi_value(const HyperellipticCurve& curve, int n, const BigRational& x0, const BigRational& y0);

}  // namespace psiq::genus2
