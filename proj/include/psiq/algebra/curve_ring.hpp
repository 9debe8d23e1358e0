#pragma once

#include <memory>
#include <string>

#include "psiq/algebra/polynomial.hpp"

namespace psiq {

// The coordinate ring F[x, y] / (y^2 - f(x)).
template <class S>
class QuotientRing {
 public:
  explicit QuotientRing(Polynomial<S> f) : f_(std::move(f)) {
    if (f_.degree() < 1) throw DomainError("curve polynomial must be non-constant");
  }
  const Polynomial<S>& f() const { return f_; }

 private:
  Polynomial<S> f_;
};

template <class S>
using RingHandle = std::shared_ptr<const QuotientRing<S>>;

template <class S>
RingHandle<S> make_ring(Polynomial<S> f) {
  return std::make_shared<const QuotientRing<S>>(std::move(f));
}

// a(x) + b(x) y in normal form. Every binary operation requires both
// operands to carry the same ring; default-constructed elements carry none
// and only serve as placeholders.
template <class S>
class RingElement {
 public:
  using Scalar = S;

  RingElement() = default;
  RingElement(RingHandle<S> ring, Polynomial<S> even, Polynomial<S> odd = {})
      : ring_(std::move(ring)), even_(std::move(even)), odd_(std::move(odd)) {}

  static RingElement zero(RingHandle<S> ring) { return RingElement(std::move(ring), {}); }
  static RingElement one(RingHandle<S> ring) { return constant(std::move(ring), S(1)); }
  static RingElement constant(RingHandle<S> ring, S value) {
    return RingElement(std::move(ring), Polynomial<S>::constant(std::move(value)));
  }
  static RingElement x(RingHandle<S> ring) { return RingElement(std::move(ring), Polynomial<S>::x()); }
  static RingElement y(RingHandle<S> ring) {
    return RingElement(std::move(ring), {}, Polynomial<S>::constant(S(1)));
  }

  const RingHandle<S>& ring() const { return ring_; }
  const Polynomial<S>& even() const { return even_; }
  const Polynomial<S>& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs) { return *this = *this * rhs; }

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator-(const RingElement& a) { return RingElement(a.ring_, -a.even_, -a.odd_); }
  friend RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }
  friend RingElement operator*(const S& s, const RingElement& a) { return a.scaled(s); }
  friend RingElement operator*(const RingElement& a, const S& s) { return a.scaled(s); }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }

  RingElement scaled(const S& s) const { return RingElement(ring_, even_.scaled(s), odd_.scaled(s)); }
  RingElement pow(unsigned exponent) const;
  // a - b y; the product with the original is the norm.
  RingElement conjugate() const { return RingElement(ring_, even_, -odd_); }
  // a^2 - b^2 f, a polynomial in x alone.
  Polynomial<S> norm() const;
  // Multiplies by y: (a + b y) y = b f + a y.
  RingElement times_y() const;

  template <class T>
  T evaluate(const T& x, const T& y) const {
    return even_.evaluate(x) + odd_.evaluate(x) * y;
  }

  // Largest absolute coefficient over both parts.
  double magnitude() const;
  std::string to_string() const;

  static RingElement multiply(const RingElement& a, const RingElement& b);

 private:
  RingHandle<S> ring_;
  Polynomial<S> even_;
  Polynomial<S> odd_;
};

// Ring operands must share their curve.
template <class S>
void require_same_ring(const RingElement<S>& a, const RingElement<S>& b);

// q with q * b == a, computed as a * conj(b) / N(b). Throws ArithmeticError if
// b is zero or the quotient does not lie in the ring.
template <class S>
RingElement<S> exact_div(const RingElement<S>& a, const RingElement<S>& b);

// w with w * y == a; requires f | even(a).
template <class S>
RingElement<S> divide_by_y(const RingElement<S>& a);

template <class S>
inline bool is_zero(const RingElement<S>& a) {
  return a.is_zero();
}

// Largest absolute rational coefficient of either part, exact.
BigRational height(const RingElement<BigRational>& a);

using QRingElement = RingElement<BigRational>;
using CRingElement = RingElement<Complex>;

extern template class RingElement<BigRational>;
extern template class RingElement<Complex>;

}  // namespace psiq
