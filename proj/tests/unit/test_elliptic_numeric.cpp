#include <cmath>
#include <numbers>

#include "doctest.h"
#include "psiq/elliptic/lattice.hpp"

using namespace psiq;
using namespace psiq::elliptic;

namespace {

const Complex kI(0.0, 1.0);

std::vector<PeriodLattice> lattices() {
  const double s = 6.0;
  return {{Complex(s, 0), Complex(0, s)},
          {Complex(s, 0), s * std::exp(kI * (std::numbers::pi / 3))},
          {Complex(s, 0), Complex(0.3 * s, 1.1 * s)},
          // Non-reduced basis of the square lattice.
          {Complex(s, 0), Complex(3 * s, s)}};
}

// Direct Eisenstein sums over a square window, the reference for g2, g3.
LatticeInvariants lattice_sum(const PeriodLattice& l, int radius) {
  Complex s4(0.0), s6(0.0);
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n) {
      if (m == 0 && n == 0) continue;
      const Complex w = static_cast<double>(m) * l.omega1 + static_cast<double>(n) * l.omega2;
      const Complex w2 = 1.0 / (w * w);
      s4 += w2 * w2;
      s6 += w2 * w2 * w2;
    }
  return {60.0 * s4, 140.0 * s6};
}

std::vector<Complex> sample_points(const WeierstrassFunctions& fn) {
  std::vector<Complex> pts;
  const Complex w1 = fn.reduced().omega1, w2 = fn.reduced().omega2;
  for (int k = 0; k < 20; ++k) {
    const double s = 0.07 + 0.021 * k, t = 0.05 + 0.017 * k;
    pts.push_back(s * w1 + t * w2);
  }
  return pts;
}

}  // namespace

TEST_CASE("square and hexagonal lattices have vanishing g3 and g2") {
  const auto sq = lattice_invariants({Complex(1, 0), Complex(0, 1)});
  CHECK(std::abs(sq.g3) < 1e-12);
  CHECK(std::abs(sq.g2 - 189.07272) < 1e-4);
  const auto hx = lattice_invariants({Complex(1, 0), std::exp(kI * (std::numbers::pi / 3))});
  CHECK(std::abs(hx.g2) < 1e-12);
}

TEST_CASE("q-series invariants agree with direct lattice sums") {
  for (const auto& l : lattices()) {
    const auto a = lattice_invariants(l);
    const auto b = lattice_sum(l, 400);
    CHECK(std::abs(a.g2 - b.g2) < 1e-5 * std::max(1.0, std::abs(a.g2)));
    CHECK(std::abs(a.g3 - b.g3) < 1e-5 * std::max(1.0, std::abs(a.g3)));
  }
}

TEST_CASE("wp satisfies its differential equation") {
  for (const auto& l : lattices()) {
    const WeierstrassFunctions fn(l);
    const auto inv = fn.invariants();
    for (const Complex u : sample_points(fn)) {
      const Complex x = fn.wp(u), y = fn.wp_prime(u);
      CHECK(std::abs(y * y - (4.0 * x * x * x - inv.g2 * x - inv.g3)) < 1e-9);
      CHECK(std::abs(fn.wp(u + l.omega1 - 2.0 * l.omega2) - x) < 1e-9 * std::max(1.0, std::abs(x)));
    }
  }
}

TEST_CASE("wp has the Laurent expansion fixed by g2 and g3") {
  const WeierstrassFunctions fn({Complex(6, 0), Complex(1.8, 6.6)});
  const auto inv = fn.invariants();
  const Complex u(0.05, 0.03);
  const Complex expected = 1.0 / (u * u) + inv.g2 / 20.0 * u * u + inv.g3 / 28.0 * std::pow(u, 4);
  CHECK(std::abs(fn.wp(u) - expected) < 1e-10);
}

TEST_CASE("sigma is odd and quasi-periodic") {
  for (const auto& l : lattices()) {
    const WeierstrassFunctions fn(l);
    CHECK(std::abs(fn.eta1() * l.omega2 - fn.eta2() * l.omega1 - kI * std::numbers::pi) < 1e-10);
    for (const Complex u : sample_points(fn)) {
      const Complex s = fn.sigma(u);
      CHECK(std::abs(fn.sigma(-u) + s) < 1e-12 * std::max(1.0, std::abs(s)));
      const Complex s1 = fn.sigma(u + l.omega1);
      const Complex e1 = -std::exp(2.0 * fn.eta1() * (u + 0.5 * l.omega1)) * s;
      CHECK(std::abs(s1 - e1) < 1e-9 * std::max(1.0, std::abs(e1)));
      const Complex s2 = fn.sigma(u + l.omega2);
      const Complex e2 = -std::exp(2.0 * fn.eta2() * (u + 0.5 * l.omega2)) * s;
      CHECK(std::abs(s2 - e2) < 1e-9 * std::max(1.0, std::abs(e2)));
    }
  }
}

TEST_CASE("division polynomials match the sigma quotient for n <= 6") {
  for (const auto& l : lattices()) {
    const WeierstrassFunctions fn(l);
    const auto inv = fn.invariants();
    const DivisionPolynomials<Complex> t(ComplexCurve(inv.g2, inv.g3));
    for (const Complex u : sample_points(fn))
      for (int n = 1; n <= 6; ++n) {
        const Complex psi = t.psi(n).evaluate(fn.wp(u), fn.wp_prime(u));
        CHECK(check_sigma_psi(fn, t, n, u) < 1e-8 * std::max(1.0, std::abs(psi)));
      }
  }
}

TEST_CASE("invalid lattices are rejected") {
  CHECK_THROWS_AS(WeierstrassFunctions({Complex(1, 0), Complex(2, 0)}), DomainError);
  CHECK_THROWS_AS(WeierstrassFunctions({Complex(1, 0), Complex(0, -1)}), DomainError);
}
