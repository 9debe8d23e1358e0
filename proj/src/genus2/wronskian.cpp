#include "psiq/genus2/wronskian.hpp"

#include "psiq/algebra/matrix.hpp"

namespace psiq::genus2 {

namespace {

// a (a - 1) ... (a - l + 1)
BigInteger falling(int a, int l) {
  BigInteger r = 1;
  for (int i = 0; i < l; ++i) r *= a - i;
  return r;
}

BigInteger binomial(int n, int k) {
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInteger factorial_product(int n) {
  BigInteger r = 1;
  for (int j = 1; j < n; ++j) r *= factorial(static_cast<unsigned>(j));
  return r;
}

QPoly x_power(const BigRational& c, int a) { return a < 0 ? QPoly() : QPoly::monomial(c, a); }

}  // namespace

std::vector<QPoly> derivative_numerators(const QPoly& f, int max_order) {
  std::vector<QPoly> p{QPoly::constant(1)};
  const QPoly fp = f.derivative();
  for (int k = 0; k < max_order; ++k) {
    const QPoly& pk = p.back();
    p.push_back(f * pk.derivative() - fp * pk * BigRational(2 * k - 1, 2));
  }
  return p;
}

std::vector<YLaurent> y_derivative_series(const HyperellipticCurve& curve, int max_order) {
  const auto p = derivative_numerators(curve.f(), max_order);
  std::vector<YLaurent> out;
  for (int k = 0; k <= max_order; ++k) {
    const BigRational inv(BigInteger(1), factorial(static_cast<unsigned>(k)));
    out.emplace_back(QRingElement(curve.ring(), p[static_cast<std::size_t>(k)].scaled(inv)), 2 * k - 1);
  }
  return out;
}

QRingElement psi_wronskian_raw(const HyperellipticCurve& curve, int n) {
  const MonomialBasis basis = monomial_basis(n);
  const std::size_t size = basis.monomials.size();
  const auto& ring = curve.ring();
  const auto p = derivative_numerators(curve.f(), n - 1);
  // d^k y / dx^k = P_k / y^(2k-1)
  std::vector<YLaurent> dy;
  for (int k = 0; k < n; ++k) dy.emplace_back(QRingElement(ring, p[static_cast<std::size_t>(k)]), 2 * k - 1);
  SquareMatrix<YLaurent> w(size, YLaurent::zero(ring));
  for (std::size_t r = 0; r < size; ++r) {
    const int j = static_cast<int>(r) + 1;
    for (std::size_t c = 0; c < size; ++c) {
      const Monomial& m = basis.monomials[c];
      if (!m.has_y) {
        w(r, c) = YLaurent(QRingElement(ring, x_power(BigRational(falling(m.x_power, j)), m.x_power - j)));
        continue;
      }
      YLaurent acc = YLaurent::zero(ring);
      for (int l = 0; l <= std::min(j, m.x_power); ++l) {
        const BigRational coef(binomial(j, l) * falling(m.x_power, l));
        acc = acc + YLaurent(QRingElement(ring, x_power(coef, m.x_power - l))) * dy[static_cast<std::size_t>(j - l)];
      }
      w(r, c) = acc;
    }
  }
  const YLaurent det = determinant_bareiss(w, YLaurent::one(ring));
  return det.times_y_power(n * (n - 1) / 2).to_ring_element();
}

const char* to_string(ToeplitzVariant v) {
  switch (v) {
    case ToeplitzVariant::kPure: return "pure";
    case ToeplitzVariant::kFirstColumnAdvanced: return "first-column-advanced";
    case ToeplitzVariant::kLastRowAdvanced: return "last-row-advanced";
  }
  return "unknown";
}

ToeplitzShape toeplitz_shape(int n) {
  const MonomialBasis b = monomial_basis(n);
  if (b.q < 0) throw DomainError("Toeplitz form needs n >= 4");
  return {b.q + 1, b.p - b.q + 1};
}

namespace {

int toeplitz_index(const ToeplitzShape& s, int r, int c, ToeplitzVariant v) {
  int k = s.shift + s.rows - 1 + r - c;
  if (v == ToeplitzVariant::kFirstColumnAdvanced && r >= 1 && c == 0) ++k;
  if (v == ToeplitzVariant::kLastRowAdvanced && r == s.rows - 1) ++k;
  return k;
}

}  // namespace

YLaurent toeplitz_determinant(const HyperellipticCurve& curve, int n, ToeplitzVariant variant) {
  const ToeplitzShape s = toeplitz_shape(n);
  const auto series = y_derivative_series(curve, s.shift + 2 * s.rows);
  const std::size_t size = static_cast<std::size_t>(s.rows);
  SquareMatrix<YLaurent> t(size, YLaurent::zero(curve.ring()));
  for (int r = 0; r < s.rows; ++r)
    for (int c = 0; c < s.rows; ++c) {
      const int k = toeplitz_index(s, r, c, variant);
      if (k >= 0) t(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = series[static_cast<std::size_t>(k)];
    }
  return determinant_bareiss(t, YLaurent::one(curve.ring()));
}

YLaurent psi_toeplitz_raw(const HyperellipticCurve& curve, int n, ToeplitzVariant variant) {
  const YLaurent t = toeplitz_determinant(curve, n, variant);
  return BigRational(factorial_product(n)) * t.times_y_power(n * (n - 1) / 2);
}

BigRational psi_wronskian_raw_at(const HyperellipticCurve& curve, int n, const BigRational& x0,
                                 const BigRational& y0) {
  if (sgn(y0) == 0) throw DomainError("pointwise Wronskian needs y0 != 0");
  if (!curve.contains(x0, y0)) throw DomainError("point is not on the curve");
  const MonomialBasis basis = monomial_basis(n);
  const std::size_t size = basis.monomials.size();
  const auto p = derivative_numerators(curve.f(), n - 1);
  std::vector<BigRational> dy;
  for (int k = 0; k < n; ++k) dy.push_back(p[static_cast<std::size_t>(k)](x0) * pow(y0, 1 - 2 * k));
  auto xp = [&](int a) { return a < 0 ? BigRational(0) : pow(x0, a); };
  SquareMatrix<BigRational> w(size, BigRational(0));
  for (std::size_t r = 0; r < size; ++r) {
    const int j = static_cast<int>(r) + 1;
    for (std::size_t c = 0; c < size; ++c) {
      const Monomial& m = basis.monomials[c];
      if (!m.has_y) {
        w(r, c) = BigRational(falling(m.x_power, j)) * xp(m.x_power - j);
        continue;
      }
      BigRational acc = 0;
      for (int l = 0; l <= std::min(j, m.x_power); ++l)
        acc += BigRational(binomial(j, l) * falling(m.x_power, l)) * xp(m.x_power - l) * dy[static_cast<std::size_t>(j - l)];
      w(r, c) = acc;
    }
  }
  return determinant_bareiss(w, BigRational(1)) * pow(y0, n * (n - 1) / 2);
}

BigRational toeplitz_scaled_at(const HyperellipticCurve& curve, int n, const BigRational& x0) {
  const ToeplitzShape s = toeplitz_shape(n);
  const auto p = derivative_numerators(curve.f(), s.shift + 2 * s.rows);
  const std::size_t size = static_cast<std::size_t>(s.rows);
  SquareMatrix<BigRational> t(size, BigRational(0));
  for (int r = 0; r < s.rows; ++r)
    for (int c = 0; c < s.rows; ++c) {
      const int k = toeplitz_index(s, r, c, ToeplitzVariant::kPure);
      if (k >= 0) {
        t(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            p[static_cast<std::size_t>(k)](x0) / BigRational(factorial(static_cast<unsigned>(k)));
      }
    }
  return BigRational(factorial_product(n)) * determinant_bareiss(t, BigRational(1));
}

}  // namespace psiq::genus2
