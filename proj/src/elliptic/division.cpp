#include "psiq/elliptic/division.hpp"

#include "psiq/algebra/matrix.hpp"

namespace psiq::elliptic {

namespace {

template <class S>
Polynomial<S> poly(std::initializer_list<S> c) {
  return Polynomial<S>(std::vector<S>(c));
}

}  // namespace

template <class S>
DivisionPolynomials<S>::DivisionPolynomials(WeierstrassCurve<S> curve) : curve_(std::move(curve)) {
  const auto& ring = curve_.ring();
  const S& g2 = curve_.g2();
  const S& g3 = curve_.g3();
  table_.push_back(RingElement<S>::zero(ring));
  table_.push_back(RingElement<S>::one(ring));
  table_.push_back(-RingElement<S>::y(ring));
  // 3x^4 - (3/2) g2 x^2 - 3 g3 x - g2^2/16
  table_.push_back(RingElement<S>(
      ring, poly<S>({S(-g2 * g2 / S(16)), S(S(-3) * g3), S(S(-3) * g2 / S(2)), S(0), S(3)})));
  // -y (2x^6 - (5/2) g2 x^4 - 10 g3 x^3 - (5/8) g2^2 x^2 - (1/2) g2 g3 x + g2^3/32 - g3^2)
  const Polynomial<S> p4 = poly<S>({S(g2 * g2 * g2 / S(32) - g3 * g3), S(-g2 * g3 / S(2)), S(S(-5) * g2 * g2 / S(8)),
                                    S(S(-10) * g3), S(S(-5) * g2 / S(2)), S(0), S(2)});
  table_.push_back(RingElement<S>(ring, {}, -p4));
}

template <class S>
const RingElement<S>& DivisionPolynomials<S>::ensure(int n) const {
  while (static_cast<int>(table_.size()) <= n) {
    const int target = static_cast<int>(table_.size());
    const auto& t = table_;
    if (target % 2 == 1) {
      const int k = (target - 1) / 2;
      // psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k+1}^3 psi_{k-1}
      table_.push_back(t[k + 2] * t[k].pow(3) - t[k + 1].pow(3) * t[k - 1]);
    } else {
      const int k = target / 2;
      // psi_{2k} psi_2 = psi_k psi_{k+2} psi_{k-1}^2 - psi_{k+1}^2 psi_k psi_{k-2}
      const RingElement<S> rhs = t[k] * t[k + 2] * t[k - 1].pow(2) - t[k + 1].pow(2) * t[k] * t[k - 2];
      table_.push_back(-divide_by_y(rhs));
    }
  }
  return table_[static_cast<std::size_t>(n)];
}

template <class S>
RingElement<S> DivisionPolynomials<S>::psi(int n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (n < 0) return -ensure(-n);
  return ensure(n);
}

template <class S>
RingElement<S> derivation(const WeierstrassCurve<S>& curve, const RingElement<S>& e) {
  const Polynomial<S> dy = poly<S>({S(-curve.g2() / S(2)), S(0), S(6)});
  Polynomial<S> even = e.odd().derivative() * curve.f() + e.odd() * dy;
  return RingElement<S>(curve.ring(), std::move(even), e.even().derivative());
}

template <class S>
RingElement<S> wp_derivative(const WeierstrassCurve<S>& curve, int k) {
  if (k < 0) throw DomainError("negative derivative order");
  RingElement<S> e = RingElement<S>::x(curve.ring());
  for (int i = 0; i < k; ++i) e = derivation(curve, e);
  return e;
}

QRingElement kiepert_determinant(const RationalCurve& curve, int n) {
  if (n < 2) throw DomainError("Hankel determinant needs n >= 2");
  const std::size_t size = static_cast<std::size_t>(n - 1);
  std::vector<QRingElement> wp;
  for (int k = 0; k <= 2 * (n - 1); ++k) wp.push_back(wp_derivative(curve, k));
  SquareMatrix<QRingElement> h(size, QRingElement::zero(curve.ring()));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) h(i, j) = wp[i + j + 1];
  return determinant_bareiss(h, QRingElement::one(curve.ring()));
}

namespace {

std::optional<BigRational> poly_ratio(const QPoly& a, const QPoly& b, std::optional<BigRational> s) {
  if (b.is_zero()) return a.is_zero() ? s : std::nullopt;
  if (a.degree() != b.degree()) return std::nullopt;
  const BigRational r = a.leading() / b.leading();
  if (s && *s != r) return std::nullopt;
  if (!(a == b.scaled(r))) return std::nullopt;
  return r;
}

}  // namespace

std::optional<BigRational> proportionality(const QRingElement& a, const QRingElement& b) {
  if (b.is_zero()) return std::nullopt;
  std::optional<BigRational> s;
  if (!b.even().is_zero()) {
    s = poly_ratio(a.even(), b.even(), s);
    if (!s) return std::nullopt;
  } else if (!a.even().is_zero()) {
    return std::nullopt;
  }
  if (!b.odd().is_zero()) return poly_ratio(a.odd(), b.odd(), s);
  return a.odd().is_zero() ? s : std::nullopt;
}

QRingElement addition_recursion_residual(const DivisionPolynomials<BigRational>& t, int m, int n) {
  const QRingElement lhs = t.psi(m + n) * t.psi(m - n) * t.psi(1).pow(2);
  const QRingElement det = t.psi(m + 1) * t.psi(m - 1) * t.psi(n).pow(2) - t.psi(m).pow(2) * t.psi(n + 1) * t.psi(n - 1);
  return lhs - det;
}

QRingElement bilinear_residual(const DivisionPolynomials<BigRational>& t, int n) {
  return t.psi(n + 2) * t.psi(n - 2) * t.psi(1).pow(2) - t.psi(n + 1) * t.psi(n - 1) * t.psi(2).pow(2) +
         t.psi(3) * t.psi(1) * t.psi(n).pow(2);
}

QRingElement dp1_form_residual(const DivisionPolynomials<BigRational>& t, int n) {
  const QRingElement pn2 = t.psi(n).pow(2);
  const QRingElement z = t.psi(2).pow(2);
  const QRingElement a = -(t.psi(3) * t.psi(1));
  // beta_{n+1} beta_{n-1} = psi_{n+2} psi_n^2 psi_{n-2} / (psi_{n+1}^2 psi_{n-1}^2)
  const QRingElement lhs = t.psi(n + 2) * pn2 * t.psi(n - 2);
  const QRingElement z_term = z * pn2 * t.psi(n + 1) * t.psi(n - 1);
  const QRingElement a_term = a * pn2.pow(2);
  return lhs - z_term - a_term;
}

Dp1Parameters dp1_parameters(const DivisionPolynomials<BigRational>& t, const BigRational& x0, const BigRational& y0) {
  const BigRational p1 = t.psi(1).evaluate(x0, y0);
  const BigRational p2 = t.psi(2).evaluate(x0, y0);
  const BigRational p3 = t.psi(3).evaluate(x0, y0);
  return {p2 * p2, -p3 * p1};
}

RatioSequence<BigRational> beta_at_point(const DivisionPolynomials<BigRational>& t, const BigRational& x0,
                                         const BigRational& y0, int first, int last) {
  if (!t.curve().contains(x0, y0)) throw DomainError("point is not on the curve");
  RatioSequence<BigRational> seq;
  seq.kind = SequenceKind::kBeta;
  seq.start = first;
  seq.provenance = "psi_{n+1} psi_{n-1} / psi_n^2 at (" + to_string(x0) + ", " + to_string(y0) + ")";
  for (int n = first; n <= last; ++n) {
    const BigRational den = t.psi(n).evaluate(x0, y0);
    if (sgn(den) == 0) {
      seq.truncated_at = n;
      seq.truncation_reason = "psi_" + std::to_string(n) + " vanishes at the point";
      break;
    }
    seq.push(t.psi(n + 1).evaluate(x0, y0) * t.psi(n - 1).evaluate(x0, y0) / (den * den));
  }
  return seq;
}

template class DivisionPolynomials<BigRational>;
template class DivisionPolynomials<Complex>;
template RingElement<BigRational> derivation(const RationalCurve&, const RingElement<BigRational>&);
template RingElement<Complex> derivation(const ComplexCurve&, const RingElement<Complex>&);
template RingElement<BigRational> wp_derivative(const RationalCurve&, int);
template RingElement<Complex> wp_derivative(const ComplexCurve&, int);

}  // namespace psiq::elliptic
