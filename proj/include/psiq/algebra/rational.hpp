#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace psiq {

using BigRational = mpq_class;
using BigInteger = mpz_class;
using Complex = std::complex<double>;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
// The result is canonical (reduced, positive denominator).
BigRational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);

// Exact k-th root if one exists in Q. Even k returns the non-negative root.
bool exact_root(const BigRational& value, unsigned k, BigRational& root);

BigRational pow(const BigRational& base, long exponent);

BigInteger factorial(unsigned n);

inline double to_double(const BigRational& value) { return value.get_d(); }

}  // namespace psiq
