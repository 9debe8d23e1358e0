#include "psiq/elliptic/curve.hpp"

namespace psiq::elliptic {

template <class S>
WeierstrassCurve<S>::WeierstrassCurve(S g2, S g3) : g2_(std::move(g2)), g3_(std::move(g3)) {
  const S disc = discriminant();
  bool singular = ScalarTraits<S>::is_zero(disc);
  if constexpr (!ScalarTraits<S>::exact) {
    const double scale = std::pow(ScalarTraits<S>::magnitude(g2_), 3) + 27 * std::pow(ScalarTraits<S>::magnitude(g3_), 2);
    singular = ScalarTraits<S>::magnitude(disc) <= 1e-12 * scale;
  }
  if (singular) throw DomainError("singular Weierstrass curve: g2^3 - 27 g3^2 = 0");
  ring_ = make_ring(Polynomial<S>({S(-g3_), S(-g2_), S(0), S(4)}));
}

template <class S>
WeierstrassCurve<S> WeierstrassCurve<S>::through_point(const S& g2, const S& x0, const S& y0) {
  return WeierstrassCurve(g2, S(S(4) * x0 * x0 * x0 - g2 * x0 - y0 * y0));
}

template class WeierstrassCurve<BigRational>;
template class WeierstrassCurve<Complex>;

}  // namespace psiq::elliptic
