#include "psiq/genus2/calibration.hpp"

#include <algorithm>
#include <map>

#include "psiq/algebra/linear.hpp"
#include "psiq/elliptic/division.hpp"

namespace psiq::genus2 {

namespace {

int permutation_sign(const std::array<int, 3>& p) {
  int s = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) s = -s;
  return s;
}

// sign * prod psi_indices, the indices of one expanded term.
struct Term {
  int sign;
  std::vector<int> indices;
};

std::vector<Term> recursion_terms(int m, int n) {
  std::vector<Term> terms;
  terms.push_back({1, {2, 2, m, n, m + n, m - n}});
  std::array<int, 3> perm{0, 1, 2};
  do {
    Term t{-permutation_sign(perm), {}};
    for (int r = 0; r < 3; ++r) {
      const int s = perm[static_cast<std::size_t>(r)];
      t.indices.push_back(m - 2 + r + s);
      t.indices.push_back(n - r + s);
    }
    terms.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return terms;
}

std::vector<BigRational> flatten(const QRingElement& e, int degree) {
  std::vector<BigRational> v;
  for (int k = 0; k <= degree; ++k) v.push_back(e.even().coefficient(k));
  for (int k = 0; k <= degree; ++k) v.push_back(e.odd().coefficient(k));
  return v;
}

}  // namespace

BigRational kappa_closed_form(int n) {
  if (n < 2) throw DomainError("scale factor needs n >= 2");
  BigInteger den = 1;
  for (int j = 1; j < n; ++j) den *= factorial(static_cast<unsigned>(j));
  BigInteger num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(n * (n - 1) / 2));
  BigRational k(num, den);
  k.canonicalize();
  return monomial_basis(n).weight_order_sign() < 0 ? BigRational(-k) : k;
}

Calibration calibrate_raw(const std::vector<QRingElement>& raw, int horizon) {
  if (horizon < 3 || static_cast<int>(raw.size()) <= horizon) throw DomainError("raw table shorter than the horizon");
  const auto& ring = raw[2].ring();
  Calibration cal;
  cal.horizon = horizon;
  // psi_2 = 2 y fixes kappa_2.
  const auto k2 = elliptic::proportionality(QRingElement::y(ring).scaled(BigRational(2)), raw[2]);
  if (!k2) throw DomainError("raw psi_2 is not a multiple of y");
  const std::size_t vars = static_cast<std::size_t>(horizon - 2);  // kappa_3 .. kappa_horizon
  auto var = [](int k) { return static_cast<std::size_t>(k - 3); };

  std::vector<BinomialEquation> equations;
  for (int n = 3; n <= horizon; ++n) {
    for (int m = n + 1; m + n <= horizon && m + 1 <= horizon; ++m) {
      CalibrationPair pair{m, n, 0, 0, ""};
      // Group the expanded terms by their scale monomial.
      std::map<std::vector<long>, QRingElement> groups;
      for (const Term& t : recursion_terms(m, n)) {
        int sign = t.sign;
        std::vector<long> exps(vars, 0);
        QRingElement coef = QRingElement::one(ring);
        bool vanishes = false;
        for (int idx : t.indices) {
          if (idx < 0) {
            sign = -sign;
            idx = -idx;
          }
          if (idx <= 1) {
            vanishes = true;
            break;
          }
          coef = coef * raw[static_cast<std::size_t>(idx)];
          if (idx == 2) coef = coef.scaled(*k2);
          else ++exps[var(idx)];
        }
        if (vanishes) continue;
        auto it = groups.find(exps);
        const QRingElement signed_coef = sign > 0 ? coef : -coef;
        if (it == groups.end()) groups.emplace(exps, signed_coef);
        else it->second = it->second + signed_coef;
      }
      std::vector<std::pair<std::vector<long>, QRingElement>> live;
      for (auto& [e, c] : groups)
        if (!c.is_zero()) live.emplace_back(e, c);
      pair.groups = live.size();
      if (live.empty()) {
        pair.status = "trivial";
        cal.pairs.push_back(pair);
        continue;
      }
      int degree = 0;
      for (const auto& [e, c] : live) degree = std::max({degree, c.even().degree(), c.odd().degree()});
      const std::size_t cols = live.size();
      RationalMatrix rows(static_cast<std::size_t>(2 * (degree + 1)), std::vector<BigRational>(cols));
      for (std::size_t c = 0; c < cols; ++c) {
        const auto v = flatten(live[c].second, degree);
        for (std::size_t r = 0; r < v.size(); ++r) rows[r][c] = v[r];
      }
      const auto kernel = nullspace(rows, cols);
      pair.nullity = kernel.size();
      if (kernel.size() != 1) {
        pair.status = kernel.empty() ? "inconsistent" : "ambiguous";
        if (kernel.empty()) cal.conflicts.push_back("pair (" + std::to_string(m) + "," + std::to_string(n) + ") admits no nonzero scales");
        cal.pairs.push_back(pair);
        continue;
      }
      const auto& w = kernel.front();
      if (std::any_of(w.begin(), w.end(), [](const BigRational& v) { return sgn(v) == 0; })) {
        pair.status = "inconsistent";
        cal.conflicts.push_back("pair (" + std::to_string(m) + "," + std::to_string(n) + ") forces a zero scale monomial");
        cal.pairs.push_back(pair);
        continue;
      }
      for (std::size_t g = 0; g + 1 < cols; ++g) {
        BinomialEquation eq;
        eq.exponents.resize(vars);
        for (std::size_t i = 0; i < vars; ++i) eq.exponents[i] = live[g].first[i] - live.back().first[i];
        eq.value = w[g] / w.back();
        equations.push_back(std::move(eq));
      }
      pair.status = "used";
      cal.pairs.push_back(pair);
    }
  }

  const BinomialSolution gauge = solve_binomial_system(equations, vars);
  cal.status_psi2_only = gauge.status;
  cal.gauge_dimension = gauge.free_variables.size();

  // Second anchor: psi_3 = 8 y^3.
  const auto y = QRingElement::y(ring);
  const auto k3 = elliptic::proportionality((y * y * y).scaled(BigRational(8)), raw[3]);
  if (!k3) throw DomainError("raw psi_3 is not a multiple of y^3");
  BinomialEquation anchor;
  anchor.exponents.assign(vars, 0);
  anchor.exponents[var(3)] = 1;
  anchor.value = *k3;
  equations.push_back(anchor);
  const BinomialSolution sol = solve_binomial_system(equations, vars);
  cal.status = sol.status;
  cal.kappa.assign(static_cast<std::size_t>(horizon) + 1, BigRational(0));
  cal.kappa[2] = *k2;
  if (sol.status != BinomialStatus::kUnique) {
    if (sol.status == BinomialStatus::kInconsistent) cal.conflicts.push_back("scale equations have no rational solution");
    if (sol.status == BinomialStatus::kUnderdetermined) cal.conflicts.push_back("scale equations leave free parameters");
    if (sol.status == BinomialStatus::kMultiple) cal.conflicts.push_back("scale equations have several rational solutions");
    return cal;
  }
  for (int k = 3; k <= horizon; ++k) cal.kappa[static_cast<std::size_t>(k)] = sol.solutions.front()[var(k)];

  // Exact verification of every pair with the scaled table.
  std::vector<QRingElement> psi(raw.size());
  psi[0] = QRingElement::zero(ring);
  psi[1] = QRingElement::zero(ring);
  for (int k = 2; k <= horizon; ++k) psi[static_cast<std::size_t>(k)] = raw[static_cast<std::size_t>(k)].scaled(cal.kappa[static_cast<std::size_t>(k)]);
  auto at = [&](int i) { return i < 0 ? QRingElement(-psi[static_cast<std::size_t>(-i)]) : psi[static_cast<std::size_t>(i)]; };
  cal.verified = true;
  for (const auto& pair : cal.pairs) {
    QRingElement residual = QRingElement::zero(ring);
    for (const Term& t : recursion_terms(pair.m, pair.n)) {
      QRingElement prod = QRingElement::constant(ring, BigRational(t.sign));
      for (int idx : t.indices) prod = prod * at(idx);
      residual = residual + prod;
    }
    if (!residual.is_zero()) {
      cal.verified = false;
      cal.conflicts.push_back("pair (" + std::to_string(pair.m) + "," + std::to_string(pair.n) + ") has a nonzero residual after scaling");
    }
  }
  return cal;
}

Calibration calibrate(const HyperellipticCurve& curve, int n_max) {
  if (n_max < 3) throw DomainError("calibration needs n_max >= 3");
  const int horizon = std::max(n_max, kMinCalibrationHorizon);
  std::vector<QRingElement> raw(static_cast<std::size_t>(horizon) + 1, QRingElement::zero(curve.ring()));
  for (int k = 2; k <= horizon; ++k) raw[static_cast<std::size_t>(k)] = psi_wronskian_raw(curve, k);
  return calibrate_raw(raw, horizon);
}

}  // namespace psiq::genus2
