#include "psiq/algebra/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace psiq {

template <>
Polynomial<Complex> Polynomial<Complex>::multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> r(a.c_.size() + b.c_.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

namespace {

// Rational polynomial as (integer coefficients) / common denominator.
struct IntegerForm {
  std::vector<BigInteger> coeffs;
  BigInteger denominator;
};

IntegerForm integer_form(std::span<const BigRational> c) {
  IntegerForm out;
  out.denominator = 1;
  for (const auto& v : c) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), v.get_den_mpz_t());
  out.coeffs.resize(c.size());
  BigInteger t;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(t.get_mpz_t(), out.denominator.get_mpz_t(), c[i].get_den_mpz_t());
    mpz_mul(out.coeffs[i].get_mpz_t(), c[i].get_num_mpz_t(), t.get_mpz_t());
  }
  return out;
}

}  // namespace

// Schoolbook product on the integer numerators; one rational normalisation
// per output coefficient instead of one per term.
template <>
Polynomial<BigRational> Polynomial<BigRational>::multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const IntegerForm ia = integer_form(a.c_);
  const IntegerForm ib = integer_form(b.c_);
  std::vector<BigInteger> acc(a.c_.size() + b.c_.size() - 1, BigInteger(0));
  for (std::size_t i = 0; i < ia.coeffs.size(); ++i) {
    if (ia.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < ib.coeffs.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), ia.coeffs[i].get_mpz_t(), ib.coeffs[j].get_mpz_t());
    }
  }
  const BigInteger den = ia.denominator * ib.denominator;
  std::vector<BigRational> r(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    mpq_set_num(r[k].get_mpq_t(), acc[k].get_mpz_t());
    mpq_set_den(r[k].get_mpq_t(), den.get_mpz_t());
    r[k].canonicalize();
  }
  return Polynomial(std::move(r));
}

template <class S>
Polynomial<S> Polynomial<S>::monomial(S value, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<S> c(static_cast<std::size_t>(degree) + 1, S(0));
  c.back() = std::move(value);
  return Polynomial(std::move(c));
}

template <class S>
const S& Polynomial<S>::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

template <class S>
Polynomial<S> Polynomial<S>::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<S> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<long>(i));
  return Polynomial(std::move(d));
}

template <class S>
Polynomial<S> Polynomial<S>::scaled(const S& factor) const {
  if (ScalarTraits<S>::is_zero(factor)) return {};
  std::vector<S> d(c_);
  for (auto& v : d) v *= factor;
  return Polynomial(std::move(d));
}

template <class S>
Polynomial<S> Polynomial<S>::pow(unsigned exponent) const {
  Polynomial result = constant(S(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

template <class S>
Polynomial<S>& Polynomial<S>::operator+=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), S(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

template <class S>
Polynomial<S>& Polynomial<S>::operator-=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), S(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

template <class S>
Polynomial<S>& Polynomial<S>::operator*=(const Polynomial& rhs) {
  *this = multiply(*this, rhs);
  return *this;
}

namespace {

template <class S>
std::string format_term(const S& c, int k, const std::string& var) {
  std::ostringstream os;
  os << "(" << ScalarTraits<S>::format(c) << ")";
  if (k >= 1) os << "*" << var;
  if (k >= 2) os << "^" << k;
  return os.str();
}

}  // namespace

template <class S>
std::string Polynomial<S>::to_string(const std::string& variable) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const S& c = c_[static_cast<std::size_t>(k)];
    if (ScalarTraits<S>::is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += format_term(c, k, variable);
  }
  return out;
}

template <class S>
DivisionResult<S> divmod(const Polynomial<S>& dividend, const Polynomial<S>& divisor) {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<S> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const int dd = divisor.degree();
  const int nd = dividend.degree();
  if (nd < dd) return {Polynomial<S>(), dividend};
  const auto dc = divisor.coefficients();
  const S inv_lead = S(1) / divisor.leading();
  std::vector<S> quo(static_cast<std::size_t>(nd - dd + 1), S(0));
  for (int k = nd - dd; k >= 0; --k) {
    S q = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
    if (ScalarTraits<S>::is_zero(q)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
    if constexpr (!ScalarTraits<S>::exact) rem[static_cast<std::size_t>(k + dd)] = S(0);
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<S>(std::move(quo)), Polynomial<S>(std::move(rem))};
}

template <class S>
double max_abs_coefficient(const Polynomial<S>& p) {
  double m = 0.0;
  for (const auto& c : p.coefficients()) m = std::max(m, ScalarTraits<S>::magnitude(c));
  return m;
}

template <class S>
Polynomial<S> exact_div(const Polynomial<S>& dividend, const Polynomial<S>& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if constexpr (ScalarTraits<S>::exact) {
    if (!r.is_zero()) throw ArithmeticError("polynomial division is not exact");
  } else {
    const double scale = std::max(max_abs_coefficient(dividend), 1e-300);
    if (max_abs_coefficient(r) > 1e-7 * scale) throw ArithmeticError("polynomial division is not exact to working precision");
  }
  return q;
}

template <class S>
bool divides(const Polynomial<S>& divisor, const Polynomial<S>& dividend) {
  return divmod(dividend, divisor).remainder.is_zero();
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(BigRational(1) / a.leading());
}

std::optional<QPoly> inverse_mod(const QPoly& a, const QPoly& modulus) {
  QPoly r0 = modulus, r1 = divmod(a, modulus).remainder;
  QPoly s0, s1 = QPoly::constant(BigRational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return divmod(s0.scaled(BigRational(1) / r0.leading()), modulus).remainder;
}

BigRational height(const QPoly& p) {
  BigRational m = 0;
  for (const auto& c : p.coefficients()) {
    BigRational a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

CPoly to_complex(const QPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v.get_d(), 0.0);
  return CPoly(std::move(c));
}

template class Polynomial<BigRational>;
template class Polynomial<Complex>;
template DivisionResult<BigRational> divmod(const QPoly&, const QPoly&);
template DivisionResult<Complex> divmod(const CPoly&, const CPoly&);
template QPoly exact_div(const QPoly&, const QPoly&);
template CPoly exact_div(const CPoly&, const CPoly&);
template bool divides(const QPoly&, const QPoly&);
template double max_abs_coefficient(const QPoly&);
template double max_abs_coefficient(const CPoly&);

}  // namespace psiq
