#pragma once

#include <vector>

#include "psiq/algebra/matrix.hpp"
#include "psiq/genus2/psi_table.hpp"

namespace psiq::genus2 {

// psi_2^2 psi_m psi_n psi_{n+m} psi_{m-n} - det[psi_{m-2+r+s} psi_{n-r+s}]_{r,s=0..2}
QRingElement recursion3x3_residual(const PsiTable& t, int m, int n);

// psi_3 psi_2^2 psi_{m+3} psi_{m-3} psi_m - psi_3^3 psi_{m+2} psi_m psi_{m-2}
//   - psi_5 psi_2^2 psi_{m+1} psi_m psi_{m-1}
//   + psi_4 psi_3 psi_2 (psi_{m-2} psi_{m+1}^2 + psi_{m+2} psi_{m-1}^2)
QRingElement shift3_relation_residual(const PsiTable& t, int m);

// psi_4 psi_2^2 psi_{m+4} psi_{m-4} psi_m - psi_4^3 psi_{m+2} psi_m psi_{m-2}
//   + psi_6 psi_4 psi_2 psi_m^3 - (psi_5^2 psi_2 + psi_6 psi_3^2) psi_{m+1} psi_m psi_{m-1}
//   + psi_5 psi_4 psi_3 (psi_{m-2} psi_{m+1}^2 + psi_{m+2} psi_{m-1}^2)
QRingElement shift4_relation_residual(const PsiTable& t, int m);

// psi_4 psi_2^3 psi_{n+4} psi_{n-4} - psi_5 psi_3 psi_2^2 psi_{n+3} psi_{n-3}
//   + (psi_5 psi_3^3 - psi_4^3 psi_2) psi_{n+2} psi_{n-2}
//   - psi_6 psi_3^2 psi_2 psi_{n+1} psi_{n-1} + psi_6 psi_4 psi_2^2 psi_n^2
QRingElement five_term_bilinear_residual(const PsiTable& t, int n);

struct ToeplitzVariantResult {
  ToeplitzVariant variant;
  // Indices where kappa_n * psi_toeplitz_raw differs from psi_n.
  std::vector<int> mismatches;
  bool survives() const { return mismatches.empty(); }
};

std::vector<ToeplitzVariantResult> compare_toeplitz_variants(const PsiTable& t, int n_lo, int n_hi);

}  // namespace psiq::genus2
