#include "psiq/algebra/curve_ring.hpp"

#include <algorithm>

namespace psiq {

template <class S>
void require_same_ring(const RingElement<S>& a, const RingElement<S>& b) {
  if (a.ring() == b.ring()) {
    if (!a.ring()) throw CurveMismatch("ring element has no curve attached");
    return;
  }
  if (!a.ring() || !b.ring() || !(a.ring()->f() == b.ring()->f())) {
    throw CurveMismatch("ring elements belong to different curves");
  }
}

template <class S>
RingElement<S>& RingElement<S>::operator+=(const RingElement& rhs) {
  require_same_ring(*this, rhs);
  even_ += rhs.even_;
  odd_ += rhs.odd_;
  return *this;
}

template <class S>
RingElement<S>& RingElement<S>::operator-=(const RingElement& rhs) {
  require_same_ring(*this, rhs);
  even_ -= rhs.even_;
  odd_ -= rhs.odd_;
  return *this;
}

template <class S>
RingElement<S> RingElement<S>::multiply(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  Polynomial<S> even = a.even_ * b.even_;
  Polynomial<S> odd;
  if (!a.odd_.is_zero() && !b.odd_.is_zero()) even += (a.odd_ * b.odd_) * a.ring_->f();
  if (!b.odd_.is_zero()) odd += a.even_ * b.odd_;
  if (!a.odd_.is_zero()) odd += a.odd_ * b.even_;
  return RingElement(a.ring_, std::move(even), std::move(odd));
}

template <class S>
RingElement<S> RingElement<S>::pow(unsigned exponent) const {
  if (!ring_) throw CurveMismatch("ring element has no curve attached");
  RingElement result = one(ring_);
  RingElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

template <class S>
Polynomial<S> RingElement<S>::norm() const {
  if (!ring_) throw CurveMismatch("ring element has no curve attached");
  Polynomial<S> n = even_ * even_;
  if (!odd_.is_zero()) n -= (odd_ * odd_) * ring_->f();
  return n;
}

template <class S>
RingElement<S> RingElement<S>::times_y() const {
  if (!ring_) throw CurveMismatch("ring element has no curve attached");
  return RingElement(ring_, odd_ * ring_->f(), even_);
}

template <class S>
double RingElement<S>::magnitude() const {
  return std::max(max_abs_coefficient(even_), max_abs_coefficient(odd_));
}

template <class S>
std::string RingElement<S>::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!even_.is_zero()) out = even_.to_string();
  if (!odd_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "(" + odd_.to_string() + ")*y";
  }
  return out;
}

template <class S>
RingElement<S> exact_div(const RingElement<S>& a, const RingElement<S>& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw ArithmeticError("ring division by zero");
  if (b.odd().is_zero()) {
    return RingElement<S>(a.ring(), exact_div(a.even(), b.even()), exact_div(a.odd(), b.even()));
  }
  const Polynomial<S> n = b.norm();
  if (n.is_zero()) throw ArithmeticError("ring divisor is a zero divisor");
  const RingElement<S> t = a * b.conjugate();
  return RingElement<S>(a.ring(), exact_div(t.even(), n), exact_div(t.odd(), n));
}

template <class S>
RingElement<S> divide_by_y(const RingElement<S>& a) {
  if (!a.ring()) throw CurveMismatch("ring element has no curve attached");
  return RingElement<S>(a.ring(), a.odd(), exact_div(a.even(), a.ring()->f()));
}

BigRational height(const QRingElement& a) {
  const BigRational he = height(a.even());
  const BigRational ho = height(a.odd());
  return he > ho ? he : ho;
}

template class RingElement<BigRational>;
template class RingElement<Complex>;
template void require_same_ring(const QRingElement&, const QRingElement&);
template void require_same_ring(const CRingElement&, const CRingElement&);
template QRingElement exact_div(const QRingElement&, const QRingElement&);
template CRingElement exact_div(const CRingElement&, const CRingElement&);
template QRingElement divide_by_y(const QRingElement&);
template CRingElement divide_by_y(const CRingElement&);

}  // namespace psiq
