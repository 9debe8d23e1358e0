#pragma once

#include <vector>

#include "psiq/genus2/curve.hpp"
#include "support/generators.hpp"

namespace psiq::testing {

inline genus2::HyperellipticCurve g2_curve(long l0, long l1, long l2, long l3, long l4) {
  return genus2::HyperellipticCurve({BigRational(l0), BigRational(l1), BigRational(l2), BigRational(l3), BigRational(l4)});
}

// Curves with lambda_0 = 0, so (0, 0) is a rational Weierstrass point.
inline std::vector<genus2::HyperellipticCurve> weierstrass_curves() {
  std::vector<genus2::HyperellipticCurve> out;
  out.push_back(g2_curve(0, 1, 0, 0, 0));
  out.push_back(g2_curve(0, 2, -1, 3, 1));
  Gen g(57);
  while (out.size() < 3) {
    try {
      out.emplace_back(std::array<BigRational, 5>{BigRational(0), g.nonzero_rational(5), g.rational(5), g.rational(5),
                                                  g.rational(5)});
    } catch (const DomainError&) {
    }
  }
  return out;
}

struct G2Point {
  genus2::HyperellipticCurve curve;
  BigRational x0, y0;
};

// Curves built through a chosen rational point with y0 != 0.
inline std::vector<G2Point> generic_points() {
  std::vector<G2Point> out;
  const std::array<BigRational, 4> l{BigRational(2), BigRational(-1), BigRational(3), BigRational(1, 2)};
  out.push_back({genus2::HyperellipticCurve::through_point(l, BigRational(2), BigRational(3)), BigRational(2),
                 BigRational(3)});
  out.push_back({genus2::HyperellipticCurve::through_point({BigRational(0), BigRational(1), BigRational(0),
                                                            BigRational(-2)},
                                                           BigRational(1, 2), BigRational(-1)),
                 BigRational(1, 2), BigRational(-1)});
  Gen g(91);
  while (out.size() < 3) {
    const BigRational x0 = g.rational(4), y0 = g.nonzero_rational(4);
    try {
      out.push_back({genus2::HyperellipticCurve::through_point(
                         {g.rational(4), g.rational(4), g.rational(4), g.rational(4)}, x0, y0),
                     x0, y0});
    } catch (const DomainError&) {
    }
  }
  return out;
}

}  // namespace psiq::testing
