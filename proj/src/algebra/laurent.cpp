#include "psiq/algebra/laurent.hpp"

namespace psiq {

QRingElement times_y_power(const QRingElement& a, int e) {
  if (e < 0) throw DomainError("negative y power on a ring element");
  QRingElement r = a;
  if (e >= 2) {
    const QPoly fp = a.ring()->f().pow(static_cast<unsigned>(e / 2));
    r = QRingElement(a.ring(), a.even() * fp, a.odd() * fp);
  }
  if (e % 2 == 1) r = r.times_y();
  return r;
}

YLaurent::YLaurent(QRingElement numerator, int y_power) : num_(std::move(numerator)), k_(y_power) {
  if (!num_.ring()) throw CurveMismatch("Laurent element has no curve attached");
  if (k_ < 0) {
    num_ = psiq::times_y_power(num_, -k_);
    k_ = 0;
  }
  normalize();
}

void YLaurent::normalize() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  const QPoly& f = num_.ring()->f();
  while (k_ > 0) {
    auto [q, r] = divmod(num_.even(), f);
    if (!r.is_zero()) break;
    // (a + b y) / y = (a / f) y + b
    num_ = QRingElement(num_.ring(), num_.odd(), std::move(q));
    --k_;
  }
}

const QRingElement& YLaurent::to_ring_element() const {
  if (k_ != 0) throw DomainError("Laurent element has a pole along y = 0");
  return num_;
}

YLaurent operator+(const YLaurent& a, const YLaurent& b) {
  const int k = std::max(a.k_, b.k_);
  return YLaurent(psiq::times_y_power(a.num_, k - a.k_) + psiq::times_y_power(b.num_, k - b.k_), k);
}

YLaurent operator-(const YLaurent& a, const YLaurent& b) {
  const int k = std::max(a.k_, b.k_);
  return YLaurent(psiq::times_y_power(a.num_, k - a.k_) - psiq::times_y_power(b.num_, k - b.k_), k);
}

std::string YLaurent::to_string() const {
  if (k_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/y^" + std::to_string(k_);
}

// (A / y^i) / (B / y^j) = A conj(B) y^j / (N(B) y^i). The norm N(B) may share
// factors with f, which are units in R[1/y]; those are absorbed by
// multiplying the numerator by f^s = y^(2s) for the least s that makes the
// polynomial division exact.
YLaurent exact_div(const YLaurent& a, const YLaurent& b) {
  require_same_ring(a.numerator(), b.numerator());
  if (b.is_zero()) throw ArithmeticError("Laurent division by zero");
  if (a.is_zero()) return YLaurent::zero(a.ring());
  const QPoly& f = a.ring()->f();
  const QRingElement& B = b.numerator();
  QRingElement T = a.numerator() * B.conjugate();
  QPoly n = B.norm();
  if (n.is_zero()) throw ArithmeticError("Laurent divisor is a zero divisor");
  QPoly even = T.even();
  QPoly odd = T.odd();
  const int bound = n.degree();
  for (int s = 0; s <= bound; ++s) {
    auto de = divmod(even, n);
    if (de.remainder.is_zero()) {
      auto dq = divmod(odd, n);
      if (dq.remainder.is_zero()) {
        QRingElement q(a.ring(), std::move(de.quotient), std::move(dq.quotient));
        return YLaurent(std::move(q), a.y_power() - b.y_power() + 2 * s);
      }
    }
    even = even * f;
    odd = odd * f;
  }
  throw ArithmeticError("Laurent division is not exact");
}

}  // namespace psiq
