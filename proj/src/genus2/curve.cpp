#include "psiq/genus2/curve.hpp"

namespace psiq::genus2 {

HyperellipticCurve::HyperellipticCurve(std::array<BigRational, 5> lambda) : lambda_(std::move(lambda)) {
  std::vector<BigRational> c(lambda_.begin(), lambda_.end());
  c.emplace_back(1);
  QPoly f(std::move(c));
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("singular curve: f has a repeated root");
  ring_ = make_ring(std::move(f));
}

HyperellipticCurve HyperellipticCurve::through_point(const std::array<BigRational, 4>& l, const BigRational& x0,
                                                     const BigRational& y0) {
  std::array<BigRational, 5> lambda{BigRational(0), l[0], l[1], l[2], l[3]};
  const BigRational rest = x0 * (l[0] + x0 * (l[1] + x0 * (l[2] + x0 * (l[3] + x0))));
  lambda[0] = y0 * y0 - rest;
  return HyperellipticCurve(lambda);
}

std::string HyperellipticCurve::describe() const {
  std::string s = "[";
  for (std::size_t i = 0; i < lambda_.size(); ++i) s += (i ? "," : "") + to_string(lambda_[i]);
  return s + "]";
}

}  // namespace psiq::genus2
