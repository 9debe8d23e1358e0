#include "psiq/algebra/rational.hpp"

#include <cctype>

#include "psiq/errors.hpp"

namespace psiq {

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const std::size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  BigInteger n(std::string(num), 10);
  BigInteger d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& value) { return value.get_str(10); }

bool exact_root(const BigRational& value, unsigned k, BigRational& root) {
  if (k == 0) return false;
  if (k == 1) {
    root = value;
    return true;
  }
  const bool negative = sgn(value) < 0;
  if (negative && k % 2 == 0) return false;
  BigInteger num = abs(value.get_num());
  BigInteger den = value.get_den();
  BigInteger rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return false;
  root = BigRational(negative ? BigInteger(-rn) : rn, rd);
  root.canonicalize();
  return true;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw ArithmeticError("zero raised to a negative power");
    return pow(BigRational(1) / base, -exponent);
  }
  BigInteger n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigInteger factorial(unsigned n) {
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace psiq
