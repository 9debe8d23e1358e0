#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "psiq/algebra/rational.hpp"

namespace psiq {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<BigRational> {
  static constexpr bool exact = true;
  static bool is_zero(const BigRational& v) { return sgn(v) == 0; }
  static double magnitude(const BigRational& v) { return std::fabs(v.get_d()); }
  static std::string format(const BigRational& v) { return to_string(v); }
  static Complex to_complex(const BigRational& v) { return Complex(v.get_d(), 0.0); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static double magnitude(const Complex& v) { return std::abs(v); }
  static std::string format(const Complex& v) {
    std::ostringstream os;
    os.precision(17);
    os << v.real() << (v.imag() < 0 ? "-" : "+") << std::fabs(v.imag()) << "i";
    return os.str();
  }
  static Complex to_complex(const Complex& v) { return v; }
};

}  // namespace psiq
