#pragma once

#include <random>
#include <vector>

#include "psiq/algebra/laurent.hpp"
#include "psiq/algebra/matrix.hpp"

namespace psiq::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRational rational(long height = 9) {
    BigRational r(integer(-height, height), integer(1, height));
    r.canonicalize();
    return r;
  }

  BigRational nonzero_rational(long height = 9) {
    BigRational r;
    do r = rational(height);
    while (sgn(r) == 0);
    return r;
  }

  QPoly poly(int max_degree, long height = 9) {
    std::vector<BigRational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (auto& v : c) v = rational(height);
    return QPoly(std::move(c));
  }

  QPoly nonzero_poly(int max_degree, long height = 9) {
    QPoly p;
    do p = poly(max_degree, height);
    while (p.is_zero());
    return p;
  }

  QRingElement element(const RingHandle<BigRational>& ring, int max_degree) {
    return QRingElement(ring, poly(max_degree), poly(max_degree));
  }

  QRingElement nonzero_element(const RingHandle<BigRational>& ring, int max_degree) {
    QRingElement e;
    do e = element(ring, max_degree);
    while (e.is_zero());
    return e;
  }

  YLaurent laurent(const RingHandle<BigRational>& ring, int max_degree, int max_power) {
    return YLaurent(element(ring, max_degree), static_cast<int>(integer(0, max_power)));
  }

  // Squarefree quintic with random lower coefficients.
  QPoly quintic() {
    for (;;) {
      std::vector<BigRational> c(6);
      for (int i = 0; i < 5; ++i) c[static_cast<std::size_t>(i)] = rational(5);
      c[5] = 1;
      QPoly f(std::move(c));
      if (gcd(f, f.derivative()).degree() == 0) return f;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace psiq::testing
