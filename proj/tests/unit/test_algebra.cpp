#include <map>

#include "doctest.h"
#include "psiq/algebra/linear.hpp"
#include "psiq/algebra/matrix.hpp"
#include "support/generators.hpp"

using namespace psiq;
using psiq::testing::Gen;

namespace {

// Sparse reference: coefficient maps multiplied term by term.
std::map<int, BigRational> sparse(const QPoly& p) {
  std::map<int, BigRational> m;
  for (int k = 0; k <= p.degree(); ++k)
    if (sgn(p.coefficient(k)) != 0) m[k] = p.coefficient(k);
  return m;
}

std::map<int, BigRational> sparse_product(const QPoly& a, const QPoly& b) {
  std::map<int, BigRational> out;
  for (const auto& [i, x] : sparse(a))
    for (const auto& [j, y] : sparse(b)) out[i + j] += x * y;
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

QPoly q(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -10/5 ")) == "-2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  BigRational r;
  CHECK(exact_root(BigRational(-8, 27), 3, r));
  CHECK(r == BigRational(-2, 3));
  CHECK_FALSE(exact_root(BigRational(-4), 2, r));
  CHECK_FALSE(exact_root(BigRational(2), 2, r));
}

TEST_CASE("polynomial basics") {
  const QPoly p = q({-1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(QPoly().degree() == QPoly::kZeroDegree);
  CHECK(q({0, 0, 0}).is_zero());
  CHECK(p(BigRational(3)) == 8);
  CHECK(p.derivative() == q({0, 2}));
  auto [quo, rem] = divmod(q({-1, 0, 0, 1}), q({-1, 1}));
  CHECK(quo == q({1, 1, 1}));
  CHECK(rem.is_zero());
  CHECK_THROWS_AS(exact_div(q({1, 0, 1}), q({-1, 1})), ArithmeticError);
  CHECK_THROWS_AS(divmod(p, QPoly()), ArithmeticError);
  CHECK(gcd(q({-1, 0, 1}), q({1, 2, 1})) == q({1, 1}));
}

TEST_CASE("polynomial product agrees with the sparse reference") {
  Gen g(11);
  for (int t = 0; t < 200; ++t) {
    const QPoly a = g.poly(12), b = g.poly(12);
    CHECK(sparse(a * b) == sparse_product(a, b));
  }
}

TEST_CASE("division, gcd and ring laws hold on random polynomials") {
  Gen g(12);
  for (int t = 0; t < 100; ++t) {
    const QPoly a = g.poly(10), b = g.nonzero_poly(6), c = g.poly(8);
    auto [quo, rem] = divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());
    CHECK((a + c) * b == a * b + c * b);
    CHECK(exact_div(a * b, b) == a);
    const QPoly d = gcd(a * b, c * b);
    CHECK(divides(d, a * b));
    CHECK(divides(d, c * b));
    if (!d.is_zero()) CHECK(divides(b.scaled(BigRational(1) / b.leading()), d));
  }
}

TEST_CASE("curve ring multiplication reduces y^2 = f") {
  const auto ring = make_ring(q({0, -4, 0, 4}));
  const auto y = QRingElement::y(ring);
  CHECK(y * y == QRingElement(ring, ring->f()));
  CHECK(y.times_y() == y * y);
  const QRingElement a(ring, q({1, 1}), q({2}));
  CHECK(a.norm() == (a * a.conjugate()).even());
  CHECK((a * a.conjugate()).odd().is_zero());
}

TEST_CASE("curve ring is a commutative ring with exact division") {
  Gen g(13);
  const auto ring = make_ring(g.quintic());
  for (int t = 0; t < 60; ++t) {
    const auto a = g.element(ring, 5), b = g.element(ring, 5), c = g.nonzero_element(ring, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(exact_div(a * c, c) == a);
    CHECK(divide_by_y(a.times_y()) == a);
  }
  const auto other = make_ring(g.quintic());
  CHECK_THROWS_AS(QRingElement::x(ring) + QRingElement::x(other), CurveMismatch);
  CHECK_THROWS_AS(exact_div(QRingElement::one(ring), QRingElement::x(ring)), ArithmeticError);
  CHECK_THROWS_AS(exact_div(QRingElement::one(ring), QRingElement::zero(ring)), ArithmeticError);
}

TEST_CASE("Laurent normal form has minimal y power") {
  const auto ring = make_ring(q({0, 1, 0, 0, 0, 1}));
  const auto y = QRingElement::y(ring);
  const YLaurent a(y * y * QRingElement::x(ring), 3);
  CHECK(a.y_power() == 1);
  CHECK(a.numerator() == QRingElement::x(ring));
  const YLaurent b(QRingElement::x(ring), -2);
  CHECK(b.is_polynomial());
  CHECK(b.numerator() == QRingElement(ring, ring->f() * QPoly::x()));
  CHECK(YLaurent::zero(ring).y_power() == 0);
  CHECK_THROWS_AS(a.to_ring_element(), DomainError);
}

TEST_CASE("Laurent arithmetic and exact division") {
  Gen g(14);
  const auto ring = make_ring(g.quintic());
  for (int t = 0; t < 60; ++t) {
    const auto a = g.laurent(ring, 4, 4), b = g.laurent(ring, 4, 4);
    YLaurent c;
    do c = g.laurent(ring, 3, 4);
    while (c.is_zero());
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - b) + b == a);
    CHECK(exact_div(a * c, c) == a);
  }
  // The divisor x shares a factor with f = x^5 + x, a unit in R[1/y].
  const auto ring2 = make_ring(q({0, 1, 0, 0, 0, 1}));
  const YLaurent one = YLaurent::one(ring2);
  const YLaurent x(QRingElement::x(ring2));
  CHECK(exact_div(one, x) * x == one);
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
  Gen g(15);
  for (std::size_t n = 0; n <= 4; ++n) {
    SquareMatrix<BigRational> m(n, BigRational(0));
    SquareMatrix<QPoly> p(n, QPoly());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = g.rational();
        p(i, j) = g.poly(3);
      }
    CHECK(determinant_bareiss(m, BigRational(1)) == determinant_cofactor(m, BigRational(1)));
    CHECK(determinant_bareiss(p, QPoly::constant(1)) == determinant_cofactor(p, QPoly::constant(1)));
  }
  const auto ring = make_ring(g.quintic());
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    SquareMatrix<QRingElement> r(n, QRingElement::zero(ring));
    SquareMatrix<YLaurent> l(n, YLaurent::zero(ring));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) = g.element(ring, 2);
        l(i, j) = g.laurent(ring, 2, 3);
      }
    const auto one = QRingElement::one(ring);
    CHECK(determinant_bareiss(r, one) == determinant_cofactor(r, one));
    const auto lone = YLaurent::one(ring);
    CHECK(determinant_bareiss(l, lone) == determinant_cofactor(l, lone));
  }
}

TEST_CASE("determinant is multiplicative and handles zero pivots") {
  Gen g(16);
  for (int t = 0; t < 30; ++t) {
    SquareMatrix<BigRational> a(3, BigRational(0)), b(3, BigRational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = g.rational();
        b(i, j) = g.rational();
      }
    const BigRational one(1);
    CHECK(determinant_bareiss(a * b, one) == determinant_bareiss(a, one) * determinant_bareiss(b, one));
  }
  SquareMatrix<BigRational> perm(3, BigRational(0));
  perm(0, 1) = 1;
  perm(1, 0) = 1;
  perm(2, 2) = 5;
  CHECK(determinant_bareiss(perm, BigRational(1)) == -5);
  SquareMatrix<BigRational> singular(2, BigRational(0));
  singular(0, 1) = 3;
  singular(1, 1) = 4;
  CHECK(determinant_bareiss(singular, BigRational(1)) == 0);
}

TEST_CASE("rational nullspace") {
  RationalMatrix m{{BigRational(1), BigRational(2), BigRational(3)}, {BigRational(2), BigRational(4), BigRational(6)}};
  const auto basis = nullspace(m, 3);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK(rank(m, 3) == 1);
}
