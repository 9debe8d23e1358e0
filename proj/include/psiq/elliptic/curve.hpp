#pragma once

#include "psiq/algebra/curve_ring.hpp"

namespace psiq::elliptic {

// y^2 = 4x^3 - g2 x - g3 with coefficients exact or complex.
template <class S>
class WeierstrassCurve {
 public:
  // Throws DomainError when g2^3 - 27 g3^2 vanishes.
  WeierstrassCurve(S g2, S g3);

  const S& g2() const { return g2_; }
  const S& g3() const { return g3_; }
  S discriminant() const { return S(g2_ * g2_ * g2_ - S(27) * g3_ * g3_); }
  const RingHandle<S>& ring() const { return ring_; }
  const Polynomial<S>& f() const { return ring_->f(); }
  bool contains(const S& x, const S& y) const { return ScalarTraits<S>::is_zero(S(y * y - f().evaluate(x))); }

  // The curve through (x0, y0) with the given g2.
  static WeierstrassCurve through_point(const S& g2, const S& x0, const S& y0);

 private:
  S g2_;
  S g3_;
  RingHandle<S> ring_;
};

using RationalCurve = WeierstrassCurve<BigRational>;
using ComplexCurve = WeierstrassCurve<Complex>;

extern template class WeierstrassCurve<BigRational>;
extern template class WeierstrassCurve<Complex>;

}  // namespace psiq::elliptic
