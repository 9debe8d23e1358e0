#include "psiq/genus2/psi_table.hpp"

namespace psiq::genus2 {

QPoly alpha_of(const QRingElement& psi, int n) {
  if (n < 0) return -alpha_of(-psi, -n);
  if (n <= 1) return {};
  if (!psi.even().is_zero()) throw ArithmeticError("psi_" + std::to_string(n) + " has a nonzero even part");
  if (n % 2 == 0) return psi.odd().scaled(BigRational(1, 2));
  return exact_div(psi.odd(), psi.ring()->f()).scaled(BigRational(1, 8));
}

PsiTable::PsiTable(HyperellipticCurve curve, Calibration cal, std::vector<QRingElement> psi)
    : curve_(std::move(curve)), calibration_(std::move(cal)), psi_(std::move(psi)) {
  for (int n = 0; n < static_cast<int>(psi_.size()); ++n) alpha_.push_back(alpha_of(psi_[static_cast<std::size_t>(n)], n));
}

PsiTable PsiTable::build(const HyperellipticCurve& curve, int n_max) {
  const int horizon = std::max(n_max, kMinCalibrationHorizon);
  std::vector<QRingElement> raw(static_cast<std::size_t>(horizon) + 1, QRingElement::zero(curve.ring()));
  for (int k = 2; k <= horizon; ++k) raw[static_cast<std::size_t>(k)] = psi_wronskian_raw(curve, k);
  Calibration cal = calibrate_raw(raw, horizon);
  if (!cal.ok()) {
    std::string why = std::string("calibration ") + psiq::to_string(cal.status);
    if (!cal.conflicts.empty()) why += ": " + cal.conflicts.front();
    throw DomainError(why);
  }
  std::vector<QRingElement> psi(raw.size());
  psi[0] = QRingElement::zero(curve.ring());
  psi[1] = QRingElement::zero(curve.ring());
  for (int k = 2; k <= horizon; ++k)
    psi[static_cast<std::size_t>(k)] = raw[static_cast<std::size_t>(k)].scaled(cal.kappa[static_cast<std::size_t>(k)]);
  return PsiTable(curve, std::move(cal), std::move(psi));
}

const QRingElement& PsiTable::psi(int n) const {
  if (n < 0 || n > size()) throw DomainError("psi index " + std::to_string(n) + " outside the table");
  return psi_[static_cast<std::size_t>(n)];
}

QRingElement PsiTable::signed_psi(int n) const { return n < 0 ? QRingElement(-psi(-n)) : psi(n); }

const QPoly& PsiTable::alpha(int n) const {
  if (n < 0 || n > size()) throw DomainError("alpha index " + std::to_string(n) + " outside the table");
  return alpha_[static_cast<std::size_t>(n)];
}

BigRational PsiTable::alpha_at(int n, const BigRational& x0) const {
  return n < 0 ? BigRational(-alpha(-n)(x0)) : alpha(n)(x0);
}

BigRational alpha_value(const HyperellipticCurve& curve, int n, const BigRational& x0) {
  if (n < 0) return -alpha_value(curve, -n, x0);
  if (n <= 1) return 0;
  if (n <= 3) return 1;
  const BigRational denom = n % 2 == 0 ? BigRational(2) : BigRational(8);
  return kappa_closed_form(n) * toeplitz_scaled_at(curve, n, x0) / denom;
}

BigRational psi_value(const HyperellipticCurve& curve, int n, const BigRational& x0, const BigRational& y0) {
  if (n < 0) return -psi_value(curve, -n, x0, y0);
  if (n <= 1) return 0;
  return kappa_closed_form(n) * psi_wronskian_raw_at(curve, n, x0, y0);
}

}  // namespace psiq::genus2
