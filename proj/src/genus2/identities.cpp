#include "psiq/genus2/identities.hpp"

namespace psiq::genus2 {

namespace {

QRingElement product(const PsiTable& t, std::initializer_list<int> idx) {
  QRingElement r = QRingElement::one(t.curve().ring());
  for (int i : idx) r = r * t.signed_psi(i);
  return r;
}

}  // namespace

QRingElement recursion3x3_residual(const PsiTable& t, int m, int n) {
  const auto& ring = t.curve().ring();
  SquareMatrix<QRingElement> a(3, QRingElement::zero(ring));
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      a(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = product(t, {m - 2 + r + s, n - r + s});
  return product(t, {2, 2, m, n, n + m, m - n}) - determinant_cofactor(a, QRingElement::one(ring));
}

QRingElement shift3_relation_residual(const PsiTable& t, int m) {
  return product(t, {3, 2, 2, m + 3, m - 3, m}) - product(t, {3, 3, 3, m + 2, m, m - 2}) -
         product(t, {5, 2, 2, m + 1, m, m - 1}) +
         product(t, {4, 3, 2}) * (product(t, {m - 2, m + 1, m + 1}) + product(t, {m + 2, m - 1, m - 1}));
}

QRingElement shift4_relation_residual(const PsiTable& t, int m) {
  return product(t, {4, 2, 2, m + 4, m - 4, m}) - product(t, {4, 4, 4, m + 2, m, m - 2}) +
         product(t, {6, 4, 2, m, m, m}) -
         (product(t, {5, 5, 2}) + product(t, {6, 3, 3})) * product(t, {m + 1, m, m - 1}) +
         product(t, {5, 4, 3}) * (product(t, {m - 2, m + 1, m + 1}) + product(t, {m + 2, m - 1, m - 1}));
}

QRingElement five_term_bilinear_residual(const PsiTable& t, int n) {
  return product(t, {4, 2, 2, 2, n + 4, n - 4}) - product(t, {5, 3, 2, 2, n + 3, n - 3}) +
         (product(t, {5, 3, 3, 3}) - product(t, {4, 4, 4, 2})) * product(t, {n + 2, n - 2}) -
         product(t, {6, 3, 3, 2, n + 1, n - 1}) + product(t, {6, 4, 2, 2, n, n});
}

std::vector<ToeplitzVariantResult> compare_toeplitz_variants(const PsiTable& t, int n_lo, int n_hi) {
  std::vector<ToeplitzVariantResult> out;
  for (ToeplitzVariant v :
       {ToeplitzVariant::kPure, ToeplitzVariant::kFirstColumnAdvanced, ToeplitzVariant::kLastRowAdvanced}) {
    ToeplitzVariantResult r{v, {}};
    for (int n = n_lo; n <= n_hi; ++n) {
      const YLaurent raw = psi_toeplitz_raw(t.curve(), n, v);
      const YLaurent scaled = t.calibration().kappa[static_cast<std::size_t>(n)] * raw;
      if (!(scaled == YLaurent(t.psi(n)))) r.mismatches.push_back(n);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace psiq::genus2
