#include "psiq/elliptic/lattice.hpp"

#include <cmath>
#include <numbers>

namespace psiq::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Gauss reduction keeping orientation; returns the integer matrix taking
// the reduced basis to the original one.
struct Reduction {
  PeriodLattice basis;
  // original = (a * r1 + b * r2, c * r1 + d * r2)
  long a, b, c, d;
};

Reduction reduce_basis(const PeriodLattice& in) {
  // Track the reduced basis as integer combinations of the input.
  Complex w1 = in.omega1, w2 = in.omega2;
  long m[2][2] = {{1, 0}, {0, 1}};  // w1 = m00 o1 + m01 o2, w2 = m10 o1 + m11 o2
  for (int iter = 0; iter < 200; ++iter) {
    const long k = std::lround((w2 / w1).real());
    if (k != 0) {
      w2 -= static_cast<double>(k) * w1;
      m[1][0] -= k * m[0][0];
      m[1][1] -= k * m[0][1];
    }
    if (std::abs(w2) < std::abs(w1) * (1.0 - 1e-15)) {
      const Complex t = w1;
      w1 = w2;
      w2 = -t;
      const long r0 = m[0][0], r1 = m[0][1];
      m[0][0] = m[1][0];
      m[0][1] = m[1][1];
      m[1][0] = -r0;
      m[1][1] = -r1;
      continue;
    }
    break;
  }
  // Invert the unimodular matrix to express the input in the reduced basis.
  const long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Reduction r;
  r.basis = {w1, w2};
  r.a = m[1][1] * det;
  r.b = -m[0][1] * det;
  r.c = -m[1][0] * det;
  r.d = m[0][0] * det;
  return r;
}

Complex eisenstein(Complex q2, int weight) {
  const double coefficient = weight == 4 ? 240.0 : -504.0;
  Complex sum(0.0, 0.0);
  Complex qn = q2;
  for (int n = 1; n < 400; ++n) {
    const double nk = std::pow(static_cast<double>(n), weight - 1);
    const Complex term = nk * qn / (1.0 - qn);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    qn *= q2;
  }
  return 1.0 + coefficient * sum;
}

}  // namespace

WeierstrassFunctions::WeierstrassFunctions(PeriodLattice lattice) : lattice_(lattice) {
  if (lattice.omega1 == Complex(0.0) || !((lattice.omega2 / lattice.omega1).imag() > 0.0)) {
    throw DomainError("lattice generators must satisfy Im(omega2 / omega1) > 0");
  }
  const Reduction red = reduce_basis(lattice);
  reduced_ = red.basis;
  tau_ = reduced_.omega2 / reduced_.omega1;
  q_ = std::exp(kI * kPi * tau_);
  const Theta at0 = theta1(Complex(0.0));
  theta1_prime0_ = at0.t1;
  const Complex w1 = reduced_.omega1;
  reduced_eta1_ = -kPi * kPi * at0.t3 / (6.0 * w1 * at0.t1);
  const Complex reduced_eta2 = (reduced_eta1_ * reduced_.omega2 - kI * kPi) / w1;
  eta1_ = static_cast<double>(red.a) * reduced_eta1_ + static_cast<double>(red.b) * reduced_eta2;
  eta2_ = static_cast<double>(red.c) * reduced_eta1_ + static_cast<double>(red.d) * reduced_eta2;
}

WeierstrassFunctions::Theta WeierstrassFunctions::theta1(Complex v) const {
  Theta t{Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0)};
  const double growth = std::abs(v.imag());
  const double log_q = std::log(std::abs(q_));
  for (int n = 0; n < 4000; ++n) {
    const double h = n + 0.5;
    const Complex coef = 2.0 * (n % 2 == 0 ? 1.0 : -1.0) * std::exp(kI * kPi * tau_ * (h * h));
    const double k = 2.0 * n + 1.0;
    const Complex s = std::sin(k * v), c = std::cos(k * v);
    const Complex d0 = coef * s, d1 = coef * k * c, d2 = -coef * k * k * s, d3 = -coef * k * k * k * c;
    t.t0 += d0;
    t.t1 += d1;
    t.t2 += d2;
    t.t3 += d3;
    // Terms decay once |q|^(2n+2) e^(2|Im v|) < 1; stop when negligible there.
    const bool decaying = (2.0 * n + 2.0) * log_q + 2.0 * growth < -1.0;
    const double scale = std::max({std::abs(t.t0), std::abs(t.t1), std::abs(t.t2), std::abs(t.t3), 1e-300});
    const double last = std::max({std::abs(d0), std::abs(d1), std::abs(d2), std::abs(d3)});
    if (decaying && last < 1e-18 * scale) break;
  }
  return t;
}

LatticeInvariants WeierstrassFunctions::invariants() const {
  const Complex q2 = q_ * q_;
  const Complex w1 = reduced_.omega1;
  const double pi4 = std::pow(kPi, 4), pi6 = std::pow(kPi, 6);
  return {4.0 * pi4 / 3.0 * eisenstein(q2, 4) / std::pow(w1, 4), 8.0 * pi6 / 27.0 * eisenstein(q2, 6) / std::pow(w1, 6)};
}

Complex WeierstrassFunctions::reduce(Complex u) const {
  // Solve u = s w1 + t w2 for real s, t.
  const Complex w1 = reduced_.omega1, w2 = reduced_.omega2;
  const double det = (std::conj(w1) * w2).imag();
  const double s = (std::conj(u) * w2).imag() / det;
  const double t = (std::conj(w1) * u).imag() / det;
  return u - std::round(s) * w1 - std::round(t) * w2;
}

Complex WeierstrassFunctions::sigma(Complex u) const {
  const Complex w1 = reduced_.omega1;
  const Theta th = theta1(kPi * u / w1);
  return w1 / kPi * std::exp(reduced_eta1_ * u * u / w1) * th.t0 / theta1_prime0_;
}

Complex WeierstrassFunctions::wp(Complex u) const {
  const Complex w1 = reduced_.omega1;
  const Theta th = theta1(kPi * reduce(u) / w1);
  const Complex l1 = th.t1 / th.t0;
  const Complex k = kPi / w1;
  return k * k * (l1 * l1 - th.t2 / th.t0) - 2.0 * reduced_eta1_ / w1;
}

Complex WeierstrassFunctions::wp_prime(Complex u) const {
  const Complex w1 = reduced_.omega1;
  const Theta th = theta1(kPi * reduce(u) / w1);
  const Complex l1 = th.t1 / th.t0;
  const Complex k = kPi / w1;
  return -k * k * k * (th.t3 / th.t0 - 3.0 * th.t2 * th.t1 / (th.t0 * th.t0) + 2.0 * l1 * l1 * l1);
}

LatticeInvariants lattice_invariants(const PeriodLattice& lattice) { return WeierstrassFunctions(lattice).invariants(); }

double check_sigma_psi(const WeierstrassFunctions& fn, const DivisionPolynomials<Complex>& table, int n, Complex u) {
  const Complex x = fn.wp(u), y = fn.wp_prime(u);
  const Complex lhs = table.psi(n).evaluate(x, y);
  const Complex rhs = fn.sigma(static_cast<double>(n) * u) / std::pow(fn.sigma(u), n * n);
  return std::abs(lhs - rhs);
}

}  // namespace psiq::elliptic
