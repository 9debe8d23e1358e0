#pragma once

#include <array>

#include "psiq/algebra/curve_ring.hpp"

namespace psiq::genus2 {

// y^2 = x^5 + l4 x^4 + l3 x^3 + l2 x^2 + l1 x + l0.
class HyperellipticCurve {
 public:
  // lambda[i] is the coefficient of x^i. Throws DomainError when f has a
  // repeated root.
  explicit HyperellipticCurve(std::array<BigRational, 5> lambda);

  // The curve through (x0, y0) with l1..l4 fixed; l0 absorbs the point.
  static HyperellipticCurve through_point(const std::array<BigRational, 4>& l1_to_l4, const BigRational& x0,
                                          const BigRational& y0);

  const std::array<BigRational, 5>& lambda() const { return lambda_; }
  const QPoly& f() const { return ring_->f(); }
  const RingHandle<BigRational>& ring() const { return ring_; }
  bool contains(const BigRational& x, const BigRational& y) const { return y * y == f()(x); }
  std::string describe() const;

 private:
  std::array<BigRational, 5> lambda_;
  RingHandle<BigRational> ring_;
};

}  // namespace psiq::genus2
