// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "psiq/elliptic/lattice.hpp"
#include "psiq/genus2/identities.hpp"
#include "psiq/genus2/sequences.hpp"
#include "support/genus2_curves.hpp"

using namespace psiq;

namespace {

constexpr double kOdeTolerance = 1e-9;
constexpr double kInvariantTolerance = 1e-12;
constexpr double kSigmaPsiTolerance = 1e-8;
constexpr double kFourthOrderTolerance = 1e-6;
constexpr int kNumericSamples = 20;

// Hankel scalars for n = 2..8, frozen from the Laurent-coefficient oracle
// of the unit tests.
const char* const kKiepertScalars[] = {"-1", "4", "-144", "82944", "-1194393600", "619173642240000",
                                       "-15728001190723584000000"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      failures.push_back(what);
      pass = false;
    }
  }
};

std::vector<elliptic::RationalCurve> elliptic_curves(std::vector<std::pair<BigRational, BigRational>>& points) {
  std::vector<elliptic::RationalCurve> out;
  psiq::testing::Gen g(2024);
  while (out.size() < 5) {
    const BigRational x0 = g.rational(7), y0 = g.nonzero_rational(7);
    try {
      out.push_back(elliptic::RationalCurve::through_point(g.rational(9), x0, y0));
      points.emplace_back(x0, y0);
    } catch (const DomainError&) {
    }
  }
  return out;
}

const genus2::PsiTable& table_for(const genus2::HyperellipticCurve& c, int n_max = 14) {
  static std::map<std::string, genus2::PsiTable> cache;
  const std::string key = c.describe() + "/" + std::to_string(n_max);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, genus2::PsiTable::build(c, n_max)).first;
  return it->second;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

std::vector<std::pair<BigRational, BigRational>> g_points;
std::vector<elliptic::RationalCurve> g_elliptic = elliptic_curves(g_points);

void criterion1(Outcome& o) {
  int count = 0;
  for (const auto& c : g_elliptic) {
    const elliptic::DivisionPolynomials<BigRational> t(c);
    for (int m = 1; m <= 10; ++m)
      for (int n = 0; n < m; ++n) {
        ++count;
        o.require(elliptic::addition_recursion_residual(t, m, n).is_zero(),
                  "(" + std::to_string(m) + "," + std::to_string(n) + ")");
      }
  }
  o.detail << count << " exact residuals on 5 curves";
}

void criterion2(Outcome& o) {
  int count = 0;
  for (std::size_t i = 0; i < g_elliptic.size(); ++i) {
    const elliptic::DivisionPolynomials<BigRational> t(g_elliptic[i]);
    for (int n = 2; n <= 10; ++n) {
      o.require(elliptic::bilinear_residual(t, n).is_zero(), "bilinear n=" + std::to_string(n));
      o.require(elliptic::dp1_form_residual(t, n).is_zero(), "dp1 form n=" + std::to_string(n));
      count += 2;
    }
    const auto& [x0, y0] = g_points[i];
    const auto beta = elliptic::beta_at_point(t, x0, y0, 2, 11);
    const auto p = elliptic::dp1_parameters(t, x0, y0);
    for (int n = 3; n <= 10; ++n) {
      if (!beta.has(n + 1) || sgn(beta.at(n)) == 0) continue;
      const BigRational& b = beta.at(n);
      o.require(beta.at(n + 1) * beta.at(n - 1) == p.z / b + p.a / (b * b), "beta n=" + std::to_string(n));
      ++count;
    }
  }
  o.detail << count << " exact checks, beta at a rational point on each curve";
}

void criterion3(Outcome& o) {
  for (int n = 2; n <= 8; ++n) {
    std::optional<BigRational> first;
    for (const auto& c : g_elliptic) {
      const elliptic::DivisionPolynomials<BigRational> t(c);
      const auto s = elliptic::proportionality(elliptic::kiepert_determinant(c, n), t.psi(n));
      o.require(s.has_value(), "not proportional n=" + std::to_string(n));
      if (!s) continue;
      if (!first) first = s;
      o.require(*s == *first, "scalar varies n=" + std::to_string(n));
    }
    if (first) o.require(*first == parse_rational(kKiepertScalars[n - 2]), "frozen scalar n=" + std::to_string(n));
  }
  o.detail << "scalars n=2..8 identical across 5 curves";
}

void criterion4(Outcome& o) {
  const double s = 6.0;
  const Complex i(0.0, 1.0);
  const std::vector<elliptic::PeriodLattice> lattices{{Complex(s, 0), Complex(0, s)},
                                                      {Complex(s, 0), s * std::exp(i * (std::numbers::pi / 3))},
                                                      {Complex(s, 0), Complex(0.3 * s, 1.1 * s)}};
  double worst_ode = 0, worst_def = 0;
  for (const auto& l : lattices) {
    const elliptic::WeierstrassFunctions fn(l);
    const auto inv = fn.invariants();
    const elliptic::DivisionPolynomials<Complex> table(elliptic::ComplexCurve(inv.g2, inv.g3));
    const Complex w1 = fn.reduced().omega1, w2 = fn.reduced().omega2;
    for (int k = 0; k < kNumericSamples; ++k) {
      const Complex u = (0.07 + 0.021 * k) * w1 + (0.05 + 0.017 * k) * w2;
      const Complex x = fn.wp(u), y = fn.wp_prime(u);
      worst_ode = std::max(worst_ode, std::abs(y * y - 4.0 * x * x * x + inv.g2 * x + inv.g3));
      for (int n = 1; n <= 6; ++n) {
        const double psi = std::abs(table.psi(n).evaluate(x, y));
        worst_def = std::max(worst_def, elliptic::check_sigma_psi(fn, table, n, u) / std::max(1.0, psi));
      }
    }
  }
  const auto sq = elliptic::lattice_invariants({Complex(1, 0), Complex(0, 1)});
  const auto hx = elliptic::lattice_invariants({Complex(1, 0), std::exp(i * (std::numbers::pi / 3))});
  o.require(worst_ode < kOdeTolerance, "ode");
  o.require(std::abs(sq.g3) < kInvariantTolerance, "square g3");
  o.require(std::abs(hx.g2) < kInvariantTolerance, "hexagonal g2");
  o.require(worst_def < kSigmaPsiTolerance, "sigma/psi");
  char buf[200];
  std::snprintf(buf, sizeof buf, "ode %.1e, |g3(square)| %.1e, |g2(hex)| %.1e, sigma/psi %.1e", worst_ode,
                std::abs(sq.g3), std::abs(hx.g2), worst_def);
  o.detail << buf;
}

void criterion5(Outcome& o) {
  std::optional<std::vector<BigRational>> first;
  bool psi3 = true;
  int pairs = 0;
  for (const auto& c : psiq::testing::weierstrass_curves()) {
    const auto& t = table_for(c, 12);
    const auto& cal = t.calibration();
    o.require(cal.ok(), "calibration not unique on " + c.describe());
    std::vector<BigRational> k(cal.kappa.begin() + 2, cal.kappa.begin() + 13);
    if (!first) first = k;
    o.require(k == *first, "kappa varies");
    for (int m = 3; m <= 12; ++m)
      for (int n = 2; n < m && m + n <= 12; ++n) {
        ++pairs;
        o.require(genus2::recursion3x3_residual(t, m, n).is_zero(),
                  "(" + std::to_string(m) + "," + std::to_string(n) + ")");
      }
    const auto y = QRingElement::y(c.ring());
    o.require(t.psi(2) == y.scaled(BigRational(2)), "psi2 anchor");
    psi3 = psi3 && t.psi(3) == (y * y * y).scaled(BigRational(8));
    o.require(cal.gauge_dimension == 1, "gauge");
  }
  o.detail << "kappa_2..12 unique on 3 curves, " << pairs << " pairs exact; psi_3 = 8y^3: "
           << (psi3 ? "yes (psi_2 alone leaves one free scale, fixed by psi_3)" : "no");
}

void criterion6(Outcome& o) {
  int count = 0;
  for (const auto& c : psiq::testing::weierstrass_curves()) {
    const auto& t = table_for(c);
    for (int m = 4; m <= 9; ++m) {
      o.require(genus2::shift3_relation_residual(t, m).is_zero(), "shift3 m=" + std::to_string(m));
      o.require(genus2::shift4_relation_residual(t, m).is_zero(), "shift4 m=" + std::to_string(m));
      count += 2;
    }
    for (int n = 4; n <= 10; ++n, ++count)
      o.require(genus2::five_term_bilinear_residual(t, n).is_zero(), "five-term n=" + std::to_string(n));
  }
  o.detail << count << " exact residuals on 3 curves";
}

void criterion7(Outcome& o) {
  std::vector<std::string> notes;
  for (const auto& c : psiq::testing::weierstrass_curves()) {
    const auto w = genus2::weierstrass_point_data(c, BigRational(0), 16);
    for (const auto& r : {genus2::weierstrass_bilinear_report(w, 4, 12), genus2::weierstrass_dp1_report(w, 4, 12),
                          genus2::third_order_report(w, 4, 12),
                          genus2::d_ratio_equivalence_report(table_for(c), w, 4, 13)}) {
      o.require(r.passed(), r.identity + " at " + join(r.failures()) + " on " + c.describe());
      if (r.passed()) notes.push_back(r.identity);
    }
  }
  o.detail << "bilinear, dP-I and third-order over n <= 12 at (0,0) on 3 curves";
}

void criterion8(Outcome& o) {
  for (const auto& [c, x0, y0] : psiq::testing::generic_points()) {
    const auto g = genus2::generic_point_data(c, x0, y0, 14);
    const auto r = genus2::sixth_order_report(g, 5, 10);
    o.require(r.evaluated() == 6 && r.exact_zero(), "sixth-order on " + c.describe());
  }
  o.detail << "n=5..10 exact at 3 rational points with y != 0";
}

void criterion9(Outcome& o) {
  std::map<int, BigRational> scalars;
  std::map<genus2::ToeplitzVariant, int> survived;
  const auto curves = psiq::testing::weierstrass_curves();
  for (const auto& c : curves) {
    const auto& t = table_for(c);
    for (const auto& v : genus2::compare_toeplitz_variants(t, 4, 10))
      if (v.survives()) ++survived[v.variant];
    for (int n = 4; n <= 10; ++n) {
      const YLaurent toe = psi_toeplitz_raw(c, n, genus2::ToeplitzVariant::kPure);
      o.require(toe.is_polynomial(), "pure Toeplitz not polynomial n=" + std::to_string(n));
      if (!toe.is_polynomial()) continue;
      const auto s = elliptic::proportionality(t.psi(n), toe.to_ring_element());
      o.require(s.has_value(), "routes not proportional n=" + std::to_string(n));
      if (!s) continue;
      auto [it, fresh] = scalars.emplace(n, *s);
      if (!fresh) o.require(it->second == *s, "scalar varies n=" + std::to_string(n));
    }
  }
  int full = 0;
  std::string who;
  for (const auto& [v, k] : survived)
    if (k == static_cast<int>(curves.size())) {
      ++full;
      who = to_string(v);
    }
  o.require(full == 1, "surviving variants: " + std::to_string(full));
  o.detail << "per-n scalars n=4..10 curve independent; survivor: " << who;
}

template <class S>
RatioSequence<S> from(const RatioSequence<S>& s, int first, int last = 1 << 30) {
  RatioSequence<S> out;
  out.start = first;
  out.stride = s.stride;
  for (int i = first; i <= last && s.has(i); i += s.stride) out.push(s.at(i));
  return out;
}

RatioSequence<BigRational> every_other(const RatioSequence<BigRational>& s, int first, int last) {
  RatioSequence<BigRational> out;
  out.start = first;
  out.stride = 2;
  for (int i = first; i <= last && s.has(i); i += 2) out.push(s.at(i));
  return out;
}

void criterion10(Outcome& o) {
  {
    const auto& [x0, y0] = g_points[0];
    const elliptic::DivisionPolynomials<BigRational> t(g_elliptic[0]);
    const auto beta = elliptic::beta_at_point(t, x0, y0, 2, 12);
    const auto p = elliptic::dp1_parameters(t, x0, y0);
    const auto orbit = seq::iterate_dp1(seq::Dp1Params<BigRational>{p.z, p.a}, 2, {beta.at(2), beta.at(3)}, 12);
    const auto r = seq::compare(from(orbit, 4), beta);
    o.require(r.evaluated() >= 8 && r.exact_zero(), "elliptic dP-I");
  }
  const auto c = psiq::testing::weierstrass_curves()[1];
  const auto w = genus2::weierstrass_point_data(c, BigRational(0), 25);
  const auto p = genus2::weierstrass_dp1_params(w);
  const auto even = seq::iterate_dp1(p, 4, {w.c.at(4), w.c.at(6)}, 22, 2);
  const auto re = seq::compare(from(even, 8), every_other(w.c, 8, 22));
  o.require(re.evaluated() >= 8 && re.exact_zero(), "c even sublattice");
  const auto odd = seq::iterate_dp1(p, 5, {w.c.at(5), w.c.at(7)}, 23, 2);
  const auto ro = seq::compare(from(odd, 9), every_other(w.c, 9, 23));
  o.require(ro.evaluated() >= 8 && ro.exact_zero(), "c odd sublattice (first bad index " +
                                                        (ro.failures().empty() ? "-" : ro.failures().front()) + ")");
  const auto d = seq::iterate_third_order(genus2::third_order_params(w), 4, {w.d.at(4), w.d.at(5), w.d.at(6)}, 15);
  const auto rd = seq::compare(from(d, 7), w.d);
  o.require(rd.evaluated() >= 8 && rd.exact_zero(),
            "d third-order (first bad index " + (rd.failures().empty() ? "-" : rd.failures().front()) + ")");
  const auto [gc, gx, gy] = psiq::testing::generic_points()[0];
  const auto g = genus2::generic_point_data(gc, gx, gy, 15);
  std::array<BigRational, 6> seeds;
  for (int k = 0; k < 6; ++k) seeds[static_cast<std::size_t>(k)] = g.b.at(3 + k);
  const auto b = seq::iterate_sixth_order(g.params, 3, seeds, 14);
  const auto rb = seq::compare(from(b, 9), g.b);
  o.require(rb.evaluated() >= 6 && rb.exact_zero(), "b sixth-order");
  o.detail << "beta 9 steps, c 8+8 steps, d 9 steps, b 6 steps";
}

void criterion11(Outcome& o) {
  const auto& t = table_for(psiq::testing::weierstrass_curves()[1]);
  const auto r = genus2::fourth_order_exploration(t, 8, 11, kFourthOrderTolerance);
  if (r.point) {
    o.require(r.report.passed(), "residual above tolerance");
    char buf[160];
    std::snprintf(buf, sizeof buf, "max relative residual %.1e at alpha_4 root %.6f%+.6fi (non-gating)",
                  r.report.max_norm(), r.point->real(), r.point->imag());
    o.detail << buf;
  } else {
    o.detail << "degeneration flagged: " << r.report.entries.at(0).note;
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"elliptic addition recursion", criterion1},
      {"elliptic bilinear and dP-I forms", criterion2},
      {"Hankel determinant scalars", criterion3},
      {"numeric Weierstrass layer", criterion4},
      {"genus-2 calibration", criterion5},
      {"genus-2 shift and five-term identities", criterion6},
      {"Weierstrass-point identities", criterion7},
      {"generic-point sixth-order recurrence", criterion8},
      {"Wronskian and Toeplitz routes", criterion9},
      {"iterator round trips", criterion10},
      {"fourth-order exploration", criterion11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::string text = o.detail.str();
    for (std::size_t f = 0; f < o.failures.size(); ++f) text += (f == 0 ? "; failed: " : ", ") + o.failures[f];
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                text.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
