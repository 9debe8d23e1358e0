#include "psiq/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "psiq/elliptic/division.hpp"
#include "psiq/elliptic/lattice.hpp"
#include "psiq/genus2/identities.hpp"
#include "psiq/genus2/sequences.hpp"

namespace psiq::cli {

namespace {

void add_element(ResidualReport& r, const std::string& index, const QRingElement& residual) {
  const BigRational h = height(residual);
  r.add_exact(index, psiq::to_string(h), to_double(h), residual.is_zero());
}

void add_flag(ResidualReport& r, const std::string& index, bool ok, const std::string& failure) {
  r.add_exact(index, ok ? "0" : failure, ok ? 0.0 : 1.0, ok);
}

ResidualReport named(std::string identity, bool gating = true) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.gating = gating;
  return r;
}

ResidualReport numeric(std::string identity, double tolerance) {
  ResidualReport r = named(std::move(identity));
  r.exact = false;
  r.tolerance = tolerance;
  return r;
}

NamedSequence exported(const std::string& name, const RatioSequence<BigRational>& s) {
  NamedSequence out{name, {}};
  for (int i = s.start; s.has(i); i += s.stride) out.values.emplace_back(i, psiq::to_string(s.at(i)));
  return out;
}

template <class T>
T& need(std::optional<T>& value, const char* what) {
  if (!value) throw SuiteMismatch(what);
  return *value;
}

const elliptic::RationalCurve& elliptic_curve(const CurveSpec& spec, Suite suite) {
  if (spec.kind != CurveKind::kElliptic || !spec.elliptic)
    throw SuiteMismatch(std::string(to_string(suite)) + " needs an elliptic curve with g2 and g3");
  return *spec.elliptic;
}

const genus2::HyperellipticCurve& genus2_curve(const CurveSpec& spec, Suite suite) {
  if (spec.kind != CurveKind::kGenus2) throw SuiteMismatch(std::string(to_string(suite)) + " needs a genus-2 curve");
  return *spec.genus2;
}

std::optional<BigRational> weierstrass_x0(const CurveSpec& spec) {
  if (spec.x0 && spec.y0 && sgn(*spec.y0) == 0) return spec.x0;
  return find_rational_root(spec.genus2->f());
}

std::optional<std::pair<BigRational, BigRational>> generic_point(const CurveSpec& spec) {
  if (spec.x0 && spec.y0 && sgn(*spec.y0) != 0) return std::pair{*spec.x0, *spec.y0};
  return find_rational_point(*spec.genus2);
}

std::optional<std::pair<BigRational, BigRational>> elliptic_point(const CurveSpec& spec) {
  if (spec.x0 && spec.y0) return std::pair{*spec.x0, *spec.y0};
  const auto& c = *spec.elliptic;
  for (long q = 1; q <= 24; ++q)
    for (long p = 0; p <= 24; ++p)
      for (long s : {1L, -1L}) {
        BigRational x(s * p, q);
        x.canonicalize();
        if (x.get_den() != q || (p == 0 && s < 0)) continue;
        const BigRational v = c.f()(x);
        BigRational y;
        if (sgn(v) > 0 && exact_root(v, 2, y)) return std::pair{x, y};
      }
  return std::nullopt;
}

void elliptic_identities(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  const auto& c = elliptic_curve(spec, Suite::kEllipticIdentities);
  const elliptic::DivisionPolynomials<BigRational> t(c);
  auto rec = named("addition-recursion");
  for (int m = 1; m <= o.n_max; ++m)
    for (int n = 0; n < m; ++n) add_element(rec, std::to_string(m) + "," + std::to_string(n),
                                            elliptic::addition_recursion_residual(t, m, n));
  auto bil = named("bilinear");
  auto dp1 = named("dp1-form");
  for (int n = 2; n <= o.n_max; ++n) {
    add_element(bil, std::to_string(n), elliptic::bilinear_residual(t, n));
    add_element(dp1, std::to_string(n), elliptic::dp1_form_residual(t, n));
  }
  auto kiepert = named("kiepert-proportional");
  for (int n = 2; n <= std::min(o.n_max, 8); ++n) {
    const auto s = elliptic::proportionality(elliptic::kiepert_determinant(c, n), t.psi(n));
    add_flag(kiepert, std::to_string(n), s.has_value(), "not proportional");
    if (s) out.info.emplace_back("kiepert_scalar_" + std::to_string(n), psiq::to_string(*s));
  }
  out.checks = {rec, bil, dp1, kiepert};

  if (spec.x0 && spec.y0) {
    const auto& x0 = *spec.x0;
    const auto& y0 = *spec.y0;
    const auto beta = elliptic::beta_at_point(t, x0, y0, 2, o.n_max + 1);
    const auto p = elliptic::dp1_parameters(t, x0, y0);
    out.info.emplace_back("dp1_z", psiq::to_string(p.z));
    out.info.emplace_back("dp1_a", psiq::to_string(p.a));
    auto at = named("dp1-at-point");
    for (int n = 3; n <= o.n_max; ++n) {
      if (!beta.has(n - 1) || !beta.has(n + 1) || sgn(beta.at(n)) == 0) {
        at.add_skipped(std::to_string(n), "beta undefined near this index");
        continue;
      }
      const BigRational& b = beta.at(n);
      const BigRational res = beta.at(n + 1) * beta.at(n - 1) - p.z / b - p.a / (b * b);
      at.add_exact(std::to_string(n), psiq::to_string(res), std::fabs(to_double(res)), sgn(res) == 0);
    }
    out.checks.push_back(at);
    out.sequences.push_back(exported("beta", beta));
  }
}

struct NamedLattice {
  std::string name;
  elliptic::PeriodLattice lattice;
};

std::vector<NamedLattice> numeric_lattices(const CurveSpec& spec) {
  if (spec.lattice) return {{"given", *spec.lattice}};
  // Scale 6 keeps |psi_n| moderate at the sample points.
  const double s = 6.0;
  const Complex i(0.0, 1.0);
  return {{"square", {Complex(s, 0), Complex(0, s)}},
          {"hexagonal", {Complex(s, 0), s * std::exp(i * (std::numbers::pi / 3))}},
          {"generic", {Complex(s, 0), Complex(0.3 * s, 1.1 * s)}}};
}

void elliptic_numeric(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  if (spec.kind != CurveKind::kElliptic) throw SuiteMismatch("elliptic-numeric needs an elliptic spec");
  for (const auto& [name, lattice] : numeric_lattices(spec)) {
    const elliptic::WeierstrassFunctions fn(lattice);
    const auto inv = fn.invariants();
    const elliptic::DivisionPolynomials<Complex> table(elliptic::ComplexCurve(inv.g2, inv.g3));
    std::vector<Complex> pts;
    const Complex w1 = fn.reduced().omega1, w2 = fn.reduced().omega2;
    for (int k = 0; k < 20; ++k) pts.push_back((0.07 + 0.021 * k) * w1 + (0.05 + 0.017 * k) * w2);

    auto ode = numeric("wp-ode[" + name + "]", 1e-9);
    auto quasi = numeric("sigma-quasi-periodic[" + name + "]", o.tolerance);
    auto agree = numeric("sigma-psi[" + name + "]", o.tolerance);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const Complex u = pts[k];
      const Complex x = fn.wp(u), y = fn.wp_prime(u);
      ode.add_numeric(std::to_string(k), std::abs(y * y - (4.0 * x * x * x - inv.g2 * x - inv.g3)));
      const Complex s = fn.sigma(u);
      const Complex e = -std::exp(2.0 * fn.eta1() * (u + 0.5 * lattice.omega1)) * s;
      quasi.add_numeric(std::to_string(k), std::abs(fn.sigma(u + lattice.omega1) - e) / std::max(1.0, std::abs(e)),
                        "relative");
      for (int n = 1; n <= std::min(o.n_max, 6); ++n) {
        const double psi = std::abs(table.psi(n).evaluate(x, y));
        agree.add_numeric(std::to_string(n) + "@" + std::to_string(k),
                          elliptic::check_sigma_psi(fn, table, n, u) / std::max(1.0, psi), "relative");
      }
    }
    out.checks.push_back(ode);
    out.checks.push_back(quasi);
    out.checks.push_back(agree);
    if (name == "square") {
      auto g3 = numeric("g3-vanishes[square]", 1e-12);
      g3.add_numeric("0", std::abs(inv.g3) / std::max(1.0, std::abs(inv.g2)), "relative to max(1, |g2|)");
      out.checks.push_back(g3);
    }
    if (name == "hexagonal") {
      auto g2 = numeric("g2-vanishes[hexagonal]", 1e-12);
      g2.add_numeric("0", std::abs(inv.g2) / std::max(1.0, std::abs(inv.g3)), "relative to max(1, |g3|)");
      out.checks.push_back(g2);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", inv.g2.real(), inv.g2.imag());
    out.info.emplace_back("g2[" + name + "]", buf);
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", inv.g3.real(), inv.g3.imag());
    out.info.emplace_back("g3[" + name + "]", buf);
  }
}

void g2_calibrate(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  const auto& c = genus2_curve(spec, Suite::kG2Calibrate);
  const auto t = genus2::PsiTable::build(c, o.n_max);
  const auto& cal = t.calibration();
  const QRingElement y = QRingElement::y(c.ring());

  auto unique = named("calibration-unique");
  add_flag(unique, "status", cal.ok(), cal.conflicts.empty() ? "not unique" : cal.conflicts.front());
  auto rec = named("recursion-3x3");
  for (int m = 3; m <= o.n_max; ++m)
    for (int n = 2; n < m && m + n <= o.n_max; ++n)
      add_element(rec, std::to_string(m) + "," + std::to_string(n), genus2::recursion3x3_residual(t, m, n));
  auto anchors = named("anchors");
  add_element(anchors, "psi2=2y", t.psi(2) - y.scaled(BigRational(2)));
  add_element(anchors, "psi3=8y^3", t.psi(3) - (y * y * y).scaled(BigRational(8)));
  auto closed = named("kappa-closed-form");
  NamedSequence kappa{"kappa", {}};
  for (int n = 2; n <= cal.horizon; ++n) {
    const BigRational& k = cal.kappa[static_cast<std::size_t>(n)];
    const BigRational d = k - genus2::kappa_closed_form(n);
    closed.add_exact(std::to_string(n), psiq::to_string(d), std::fabs(to_double(d)), sgn(d) == 0);
    kappa.values.emplace_back(n, psiq::to_string(k));
  }
  out.checks = {unique, rec, anchors, closed};
  out.sequences.push_back(kappa);
  out.info.emplace_back("horizon", std::to_string(cal.horizon));
  out.info.emplace_back("psi2_only", std::string(to_string(cal.status_psi2_only)) + ", " +
                                         std::to_string(cal.gauge_dimension) + " free scale(s)");
  out.info.emplace_back("psi3_equals_8y3", (t.psi(3) == (y * y * y).scaled(BigRational(8)))
                                               ? "yes, once imposed to fix the remaining scale"
                                               : "no");
}

void g2_identities(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  const auto& c = genus2_curve(spec, Suite::kG2Identities);
  const auto t = genus2::PsiTable::build(c, o.n_max + 4);
  auto s3 = named("shift3");
  auto s4 = named("shift4");
  for (int m = 4; m <= o.n_max - 1; ++m) {
    add_element(s3, std::to_string(m), genus2::shift3_relation_residual(t, m));
    add_element(s4, std::to_string(m), genus2::shift4_relation_residual(t, m));
  }
  auto five = named("five-term-bilinear");
  for (int n = 4; n <= o.n_max; ++n) add_element(five, std::to_string(n), genus2::five_term_bilinear_residual(t, n));
  auto alpha = named("alpha-division");
  for (int n = 2; n <= t.size(); ++n) {
    bool ok = true;
    try {
      ok = genus2::alpha_of(t.psi(n), n) == t.alpha(n);
    } catch (const ArithmeticError&) {
      ok = false;
    }
    add_flag(alpha, std::to_string(n), ok, "inexact");
  }
  out.checks = {s3, s4, five, alpha};
  for (const auto& v : genus2::compare_toeplitz_variants(t, 4, o.n_max)) {
    const bool pure = v.variant == genus2::ToeplitzVariant::kPure;
    auto r = named(std::string("toeplitz-") + to_string(v.variant), pure);
    for (int n = 4; n <= o.n_max; ++n) {
      const bool bad = std::find(v.mismatches.begin(), v.mismatches.end(), n) != v.mismatches.end();
      add_flag(r, std::to_string(n), !bad, "differs from the Wronskian");
    }
    out.checks.push_back(r);
    out.info.emplace_back(std::string("toeplitz_") + to_string(v.variant), v.survives() ? "survives" : "rejected");
  }
}

void g2_dp1(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  const auto& c = genus2_curve(spec, Suite::kG2Dp1);
  auto x0 = weierstrass_x0(spec);
  const auto w = genus2::weierstrass_point_data(c, need(x0, "g2-dp1 needs a rational root of f"), o.n_max + 4);
  const auto p = genus2::weierstrass_dp1_params(w);
  out.info.emplace_back("x0", psiq::to_string(w.x0));
  out.info.emplace_back("z", psiq::to_string(p.z));
  out.info.emplace_back("a", psiq::to_string(p.a));
  for (int n = 4; n <= 6; ++n) out.info.emplace_back("alpha_" + std::to_string(n), psiq::to_string(w.a(n)));
  auto odd = genus2::weierstrass_odd_bilinear_report(w, 4, o.n_max);
  odd.gating = false;
  out.checks = {genus2::weierstrass_bilinear_report(w, 4, o.n_max), genus2::weierstrass_dp1_report(w, 4, o.n_max),
                odd};
  out.sequences.push_back(exported("c", w.c));
}

void g2_third_order(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  const auto& c = genus2_curve(spec, Suite::kG2ThirdOrder);
  auto x0 = weierstrass_x0(spec);
  const auto w =
      genus2::weierstrass_point_data(c, need(x0, "g2-third-order needs a rational root of f"), o.n_max + 4);
  const auto t = genus2::PsiTable::build(c, o.n_max + 1);
  const auto map = genus2::third_order_map_parameters(w.a(4), w.a(5));
  out.info.emplace_back("x0", psiq::to_string(w.x0));
  out.info.emplace_back("alpha_4", psiq::to_string(w.a(4)));
  out.info.emplace_back("alpha_5", psiq::to_string(w.a(5)));
  for (const auto& [k, v] : {std::pair{"a0", map.a0}, std::pair{"a1", map.a1}, std::pair{"a3", map.a3},
                             std::pair{"b1", map.b1}, std::pair{"b3", map.b3}})
    out.info.emplace_back(std::string("map_") + k, psiq::to_string(v));
  auto m = named("third-order-map");
  add_flag(m, "forms", genus2::third_order_map_matches(map, w.a(4), w.a(5)), "forms differ");
  out.checks = {genus2::third_order_report(w, 4, o.n_max), genus2::d_ratio_equivalence_report(t, w, 4, o.n_max), m};
  out.sequences.push_back(exported("d", w.d));
}

void g2_sixth_order(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  const auto& c = genus2_curve(spec, Suite::kG2SixthOrder);
  auto pt = generic_point(spec);
  const auto& [x0, y0] = need(pt, "g2-sixth-order needs a rational point with y != 0");
  const auto g = genus2::generic_point_data(c, x0, y0, o.n_max + 4);
  out.info.emplace_back("point", "(" + psiq::to_string(x0) + ", " + psiq::to_string(y0) + ")");
  const auto& q = g.params;
  for (const auto& [k, v] :
       {std::pair{"A", q.A}, std::pair{"B", q.B}, std::pair{"C", q.C}, std::pair{"D", q.D}, std::pair{"E", q.E}})
    out.info.emplace_back(k, psiq::to_string(v));
  out.checks = {genus2::sixth_order_report(g, 5, o.n_max)};
  // The alpha_4 = 0 regime needs b up to n + 3 above the last checked n.
  const int top = std::max(o.n_max, 8);
  const auto table = genus2::PsiTable::build(c, top + 3);
  auto fourth = genus2::fourth_order_exploration(table, 8, top, 1e-6);
  if (fourth.point) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", fourth.point->real(), fourth.point->imag());
    out.info.emplace_back("alpha4_root", buf);
  } else {
    out.info.emplace_back("alpha4_root", "degenerate at every root");
  }
  out.checks.push_back(fourth.report);
  out.sequences.push_back(exported("b", g.b));
}

ResidualReport roundtrip(std::string name, const RatioSequence<BigRational>& orbit,
                         const RatioSequence<BigRational>& closed, int first_compared) {
  RatioSequence<BigRational> tail;
  tail.kind = orbit.kind;
  tail.start = first_compared;
  tail.stride = orbit.stride;
  for (int i = first_compared; orbit.has(i); i += orbit.stride) tail.push(orbit.at(i));
  auto r = seq::compare(tail, closed);
  r.identity = std::move(name);
  if (orbit.truncated_at) r.add_skipped(std::to_string(*orbit.truncated_at), orbit.truncation_reason);
  return r;
}

RatioSequence<BigRational> stride2(const RatioSequence<BigRational>& s, int first, int last) {
  RatioSequence<BigRational> out;
  out.kind = s.kind;
  out.start = first;
  out.stride = 2;
  for (int i = first; i <= last && s.has(i); i += 2) out.push(s.at(i));
  return out;
}

void seq_roundtrip(const CurveSpec& spec, const SuiteOptions& o, SuiteReport& out) {
  if (spec.kind == CurveKind::kElliptic) {
    const auto& c = elliptic_curve(spec, Suite::kSeqRoundtrip);
    auto pt = elliptic_point(spec);
    const auto& [x0, y0] = need(pt, "seq-roundtrip needs a rational point on the curve");
    const elliptic::DivisionPolynomials<BigRational> t(c);
    const int last = std::max(o.n_max, 8) + 2;
    const auto beta = elliptic::beta_at_point(t, x0, y0, 2, last);
    const auto p = elliptic::dp1_parameters(t, x0, y0);
    const auto orbit = seq::iterate_dp1(seq::Dp1Params<BigRational>{p.z, p.a}, 2, {beta.at(2), beta.at(3)}, last);
    out.checks = {roundtrip("beta-dp1", orbit, beta, 4)};
    out.sequences = {exported("beta", beta), exported("beta-iterated", orbit)};
    return;
  }
  const auto& c = *spec.genus2;
  const int steps = std::max(8, o.n_max - 2);
  bool any = false;
  if (auto x0 = weierstrass_x0(spec)) {
    any = true;
    const auto w = genus2::weierstrass_point_data(c, *x0, 9 + 2 * steps);
    const auto p = genus2::weierstrass_dp1_params(w);
    const int even_last = 6 + 2 * steps, odd_last = 7 + 2 * steps;
    const auto even = seq::iterate_dp1(p, 4, {w.c.at(4), w.c.at(6)}, even_last, 2);
    const auto odd = seq::iterate_dp1(p, 5, {w.c.at(5), w.c.at(7)}, odd_last, 2);
    const auto d = seq::iterate_third_order(genus2::third_order_params(w), 4, {w.d.at(4), w.d.at(5), w.d.at(6)},
                                            6 + steps);
    out.checks.push_back(roundtrip("c-even-dp1", even, stride2(w.c, 4, even_last), 8));
    out.checks.push_back(roundtrip("c-odd-dp1", odd, stride2(w.c, 5, odd_last), 9));
    out.checks.push_back(roundtrip("d-third-order", d, w.d, 7));
    out.sequences.push_back(exported("c", w.c));
    out.sequences.push_back(exported("d", w.d));
  }
  if (auto pt = generic_point(spec)) {
    any = true;
    const int bsteps = std::max(6, o.n_max - 4);
    const auto g = genus2::generic_point_data(c, pt->first, pt->second, 9 + bsteps);
    std::array<BigRational, 6> seeds;
    for (int k = 0; k < 6; ++k) seeds[static_cast<std::size_t>(k)] = g.b.at(3 + k);
    const auto orbit = seq::iterate_sixth_order(g.params, 3, seeds, 8 + bsteps);
    out.checks.push_back(roundtrip("b-sixth-order", orbit, g.b, 9));
    out.sequences.push_back(exported("b", g.b));
  }
  if (!any) throw SuiteMismatch("seq-roundtrip needs a Weierstrass point or a generic rational point");
}

}  // namespace

const std::vector<std::pair<Suite, const char*>>& suite_names() {
  static const std::vector<std::pair<Suite, const char*>> names{
      {Suite::kEllipticIdentities, "elliptic-identities"},
      {Suite::kEllipticNumeric, "elliptic-numeric"},
      {Suite::kG2Calibrate, "g2-calibrate"},
      {Suite::kG2Identities, "g2-identities"},
      {Suite::kG2Dp1, "g2-dp1"},
      {Suite::kG2ThirdOrder, "g2-third-order"},
      {Suite::kG2SixthOrder, "g2-sixth-order"},
      {Suite::kSeqRoundtrip, "seq-roundtrip"},
  };
  return names;
}

const char* to_string(Suite suite) {
  for (const auto& [s, name] : suite_names())
    if (s == suite) return name;
  return "unknown";
}

Suite parse_suite(const std::string& name) {
  for (const auto& [s, n] : suite_names())
    if (name == n) return s;
  throw DomainError("unknown suite \"" + name + "\"");
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (c.gating && !c.passed()) return false;
  return true;
}

SuiteReport run_suite(const CurveSpec& spec, Suite suite, const SuiteOptions& options) {
  if (options.n_max < 6) throw DomainError("n_max must be at least 6");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport out;
  out.suite = to_string(suite);
  out.curve = spec.describe();
  switch (suite) {
    case Suite::kEllipticIdentities: elliptic_identities(spec, options, out); break;
    case Suite::kEllipticNumeric: elliptic_numeric(spec, options, out); break;
    case Suite::kG2Calibrate: g2_calibrate(spec, options, out); break;
    case Suite::kG2Identities: g2_identities(spec, options, out); break;
    case Suite::kG2Dp1: g2_dp1(spec, options, out); break;
    case Suite::kG2ThirdOrder: g2_third_order(spec, options, out); break;
    case Suite::kG2SixthOrder: g2_sixth_order(spec, options, out); break;
    case Suite::kSeqRoundtrip: seq_roundtrip(spec, options, out); break;
  }
  for (auto& c : out.checks) c.curve = out.curve;
  if (options.timing)
    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace psiq::cli
