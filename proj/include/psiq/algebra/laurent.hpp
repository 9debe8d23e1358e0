#pragma once

#include <string>

#include "psiq/algebra/curve_ring.hpp"

namespace psiq {

// Element num / y^k of R[1/y]. Normal form keeps k >= 0 minimal: while k > 0
// and y divides num, one factor of y is cancelled.
class YLaurent {
 public:
  YLaurent() = default;
  YLaurent(QRingElement numerator, int y_power);
  explicit YLaurent(QRingElement numerator) : YLaurent(std::move(numerator), 0) {}

  static YLaurent zero(RingHandle<BigRational> ring) { return YLaurent(QRingElement::zero(std::move(ring))); }
  static YLaurent one(RingHandle<BigRational> ring) { return YLaurent(QRingElement::one(std::move(ring))); }

  const QRingElement& numerator() const { return num_; }
  int y_power() const { return k_; }
  const RingHandle<BigRational>& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return k_ == 0; }
  // Throws DomainError unless the element lies in R.
  const QRingElement& to_ring_element() const;

  // Multiplies by y^e for any integer e.
  YLaurent times_y_power(int e) const { return YLaurent(num_, k_ - e); }

  friend YLaurent operator+(const YLaurent& a, const YLaurent& b);
  friend YLaurent operator-(const YLaurent& a, const YLaurent& b);
  friend YLaurent operator-(const YLaurent& a) { return YLaurent(-a.num_, a.k_); }
  friend YLaurent operator*(const YLaurent& a, const YLaurent& b) { return YLaurent(a.num_ * b.num_, a.k_ + b.k_); }
  friend YLaurent operator*(const BigRational& s, const YLaurent& a) { return YLaurent(a.num_.scaled(s), a.k_); }
  friend bool operator==(const YLaurent& a, const YLaurent& b) { return a.k_ == b.k_ && a.num_ == b.num_; }

  std::string to_string() const;

 private:
  void normalize();
  QRingElement num_;
  int k_ = 0;
};

// Multiplies a ring element by y^e, e >= 0.
QRingElement times_y_power(const QRingElement& a, int e);

// Exact quotient in R[1/y]; throws ArithmeticError when b is zero or the
// quotient does not exist.
YLaurent exact_div(const YLaurent& a, const YLaurent& b);

inline bool is_zero(const YLaurent& a) { return a.is_zero(); }

}  // namespace psiq
