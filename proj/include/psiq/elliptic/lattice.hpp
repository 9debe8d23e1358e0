#pragma once

#include "psiq/elliptic/division.hpp"

namespace psiq::elliptic {

// Lattice generated by two full periods with Im(omega2 / omega1) > 0.
struct PeriodLattice {
  Complex omega1;
  Complex omega2;
};

struct LatticeInvariants {
  Complex g2;
  Complex g3;
};

// Weierstrass sigma, wp and wp' evaluated through the Jacobi theta_1 series
// on an SL2(Z)-reduced basis, so any supported lattice sees a nome with
// |q| <= exp(-pi sqrt(3) / 2).
class WeierstrassFunctions {
 public:
  explicit WeierstrassFunctions(PeriodLattice lattice);

  const PeriodLattice& lattice() const { return lattice_; }
  const PeriodLattice& reduced() const { return reduced_; }
  Complex nome() const { return q_; }

  LatticeInvariants invariants() const;

  Complex sigma(Complex u) const;
  Complex wp(Complex u) const;
  Complex wp_prime(Complex u) const;

  // eta_i = zeta(omega_i / 2) for the generators as given, so that
  // sigma(u + omega_i) = -exp(2 eta_i (u + omega_i / 2)) sigma(u).
  Complex eta1() const { return eta1_; }
  Complex eta2() const { return eta2_; }

  // u shifted by a lattice vector into the parallelogram centred at 0.
  Complex reduce(Complex u) const;

 private:
  struct Theta {
    Complex t0, t1, t2, t3;
  };
  Theta theta1(Complex v) const;

  PeriodLattice lattice_;
  PeriodLattice reduced_;
  Complex tau_;
  Complex q_;
  Complex theta1_prime0_;
  Complex reduced_eta1_;
  Complex eta1_;
  Complex eta2_;
};

LatticeInvariants lattice_invariants(const PeriodLattice& lattice);

// |psi_n(wp(u), wp'(u)) - sigma(n u) / sigma(u)^(n^2)| with psi_n taken from
// the division polynomials of the lattice's own invariants.
double check_sigma_psi(const WeierstrassFunctions& functions, const DivisionPolynomials<Complex>& table, int n,
                       Complex u);

}  // namespace psiq::elliptic
