#include "psiq/genus2/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace psiq::genus2 {

namespace {

void add_rational(ResidualReport& r, int index, const BigRational& v) {
  r.add_exact(std::to_string(index), psiq::to_string(v), std::fabs(to_double(v)), sgn(v) == 0);
}

// p(x0) once the (x - x0) factors shared with q are cancelled, as p / q.
std::optional<BigRational> cancelled_ratio(QPoly p, QPoly q, const BigRational& x0) {
  const QPoly linear{BigRational(-x0), BigRational(1)};
  if (p.is_zero()) return BigRational(0);
  if (q.is_zero()) return std::nullopt;
  while (sgn(p(x0)) == 0 && sgn(q(x0)) == 0) {
    p = exact_div(p, linear);
    q = exact_div(q, linear);
  }
  const BigRational den = q(x0);
  if (sgn(den) == 0) return std::nullopt;
  return BigRational(p(x0) / den);
}

}  // namespace

WeierstrassPointData weierstrass_point_data(const HyperellipticCurve& curve, const BigRational& x0, int last) {
  if (sgn(curve.f()(x0)) != 0) throw DomainError("x0 = " + psiq::to_string(x0) + " is not a root of f");
  if (last < 6) throw DomainError("Weierstrass point sequences need alpha up to index 6 at least");
  WeierstrassPointData w;
  w.x0 = x0;
  for (int n = 0; n <= last; ++n) w.alpha.push_back(alpha_value(curve, n, x0));

  w.c.kind = SequenceKind::kC;
  w.c.start = 2;
  w.c.provenance = "alpha at x0 = " + psiq::to_string(x0);
  for (int n = 2; n + 2 <= last; ++n) {
    if (sgn(w.a(n)) == 0) {
      w.c.truncated_at = n;
      w.c.truncation_reason = "alpha_" + std::to_string(n) + " vanishes";
      break;
    }
    w.c.push(w.a(n + 2) * w.a(n - 2) / (w.a(n) * w.a(n)));
  }

  w.d.kind = SequenceKind::kD;
  w.d.start = 3;
  w.d.provenance = w.c.provenance;
  for (int m = 3; m + 1 <= last; ++m) {
    const BigRational den = w.a(m) * w.a(m - 1);
    if (sgn(den) == 0) {
      w.d.truncated_at = m;
      w.d.truncation_reason = "alpha_m alpha_{m-1} vanishes";
      break;
    }
    w.d.push(w.a(m + 1) * w.a(m - 2) / den);
  }
  return w;
}

ResidualReport weierstrass_bilinear_report(const WeierstrassPointData& w, int n_lo, int n_hi) {
  ResidualReport r;
  r.identity = "weierstrass-bilinear";
  for (int n = std::max(n_lo, 4); n <= n_hi; ++n) {
    if (n + 4 > w.last()) {
      r.add_skipped(std::to_string(n), "alpha_" + std::to_string(n + 4) + " not computed");
      continue;
    }
    add_rational(r, n,
                 w.a(n + 4) * w.a(n - 4) - w.a(4) * w.a(4) * w.a(n + 2) * w.a(n - 2) + w.a(6) * w.a(n) * w.a(n));
  }
  return r;
}

ResidualReport weierstrass_odd_bilinear_report(const WeierstrassPointData& w, int n_lo, int n_hi) {
  ResidualReport r;
  r.identity = "weierstrass-odd-bilinear";
  for (int n = std::max(n_lo, 4); n <= n_hi; ++n) {
    if (n % 2 == 0) continue;
    if (n + 4 > w.last()) {
      r.add_skipped(std::to_string(n), "alpha_" + std::to_string(n + 4) + " not computed");
      continue;
    }
    const BigRational& a4 = w.a(4);
    add_rational(r, n,
                 a4 * w.a(n + 4) * w.a(n - 4) - w.a(5) * w.a(n + 3) * w.a(n - 3) -
                     a4 * a4 * a4 * w.a(n + 2) * w.a(n - 2) - w.a(6) * w.a(n + 1) * w.a(n - 1) +
                     w.a(6) * a4 * w.a(n) * w.a(n));
  }
  return r;
}

seq::Dp1Params<BigRational> weierstrass_dp1_params(const WeierstrassPointData& w) {
  return {w.a(4) * w.a(4), -w.a(6)};
}

ResidualReport weierstrass_dp1_report(const WeierstrassPointData& w, int n_lo, int n_hi) {
  ResidualReport r;
  r.identity = "weierstrass-dp1";
  const auto p = weierstrass_dp1_params(w);
  for (int n = std::max(n_lo, 4); n <= n_hi; ++n) {
    if (!w.c.has(n - 2) || !w.c.has(n) || !w.c.has(n + 2)) {
      r.add_skipped(std::to_string(n), "c_" + std::to_string(n) + " or a neighbour is undefined");
      continue;
    }
    const BigRational& cn = w.c.at(n);
    add_rational(r, n, w.c.at(n + 2) * w.c.at(n - 2) * cn * cn - p.z * cn - p.a);
  }
  return r;
}

seq::ThirdOrderParams<BigRational> third_order_params(const WeierstrassPointData& w) { return {w.a(4), w.a(5)}; }

ResidualReport third_order_report(const WeierstrassPointData& w, int m_lo, int m_hi) {
  ResidualReport r;
  r.identity = "third-order";
  for (int m = std::max(m_lo, 4); m <= m_hi; ++m) {
    if (!w.d.has(m - 1) || !w.d.has(m + 2)) {
      r.add_skipped(std::to_string(m), "d_" + std::to_string(m + 2) + " or d_" + std::to_string(m - 1) +
                                           " is undefined");
      continue;
    }
    const BigRational& dm = w.d.at(m);
    const BigRational& dm1 = w.d.at(m + 1);
    add_rational(r, m, w.d.at(m + 2) * w.d.at(m - 1) * dm1 * dm - w.a(5) + w.a(4) * (dm1 + dm));
  }
  return r;
}

ThirdOrderMap third_order_map_parameters(const BigRational& alpha4, const BigRational& alpha5) {
  return {alpha5, -alpha4, BigRational(0), BigRational(0), BigRational(1)};
}

bool third_order_map_matches(const ThirdOrderMap& map, const BigRational& alpha4, const BigRational& alpha5) {
  // x_{m+2} x_{m-1} = (alpha5 - alpha4 s) / p, so the forms are
  // alpha5 - alpha4 s + 0 p over 0 + 0 s + 1 p.
  const std::array<BigRational, 3> num{map.a0, map.a1, map.a3};
  const std::array<BigRational, 3> den{map.a3, map.b1, map.b3};
  const std::array<BigRational, 3> want_num{alpha5, BigRational(-alpha4), BigRational(0)};
  const std::array<BigRational, 3> want_den{BigRational(0), BigRational(0), BigRational(1)};
  // The pair is only defined up to a common scale.
  std::optional<BigRational> scale;
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& [got, want] : {std::pair{num[i], want_num[i]}, std::pair{den[i], want_den[i]}}) {
      if (sgn(want) == 0 || sgn(got) == 0) {
        if (sgn(want) != sgn(got)) return false;
        continue;
      }
      const BigRational s = got / want;
      if (scale && *scale != s) return false;
      scale = s;
    }
  }
  return scale.has_value();
}

ResidualReport d_ratio_equivalence_report(const PsiTable& t, const WeierstrassPointData& w, int m_lo, int m_hi) {
  ResidualReport r;
  r.identity = "d-psi-route";
  for (int m = std::max(m_lo, 4); m <= m_hi; ++m) {
    if (m + 1 > t.size() || !w.d.has(m)) {
      r.add_skipped(std::to_string(m), "psi_" + std::to_string(m + 1) + " or d_" + std::to_string(m) +
                                           " unavailable");
      continue;
    }
    const QRingElement num = t.psi(m + 1) * t.psi(m - 2);
    const QRingElement den = t.psi(m) * t.psi(m - 1);
    const auto v = cancelled_ratio(num.even(), den.even(), w.x0);
    if (!v) {
      r.add_skipped(std::to_string(m), "psi ratio has a pole at x0");
      continue;
    }
    add_rational(r, m, BigRational(*v - w.d.at(m)));
  }
  return r;
}

GenericPointData generic_point_data(const HyperellipticCurve& curve, const BigRational& x0, const BigRational& y0,
                                    int last) {
  if (last < 6) throw DomainError("generic point sequences need psi up to index 6 at least");
  GenericPointData g;
  g.x0 = x0;
  g.y0 = y0;
  for (int n = 0; n <= last; ++n) g.psi.push_back(psi_value(curve, n, x0, y0));
  const auto& p = g.psi;
  g.params = seq::SixthOrderParams<BigRational>::from_psi(p[2], p[3], p[4], p[5], p[6]);
  g.b.kind = SequenceKind::kB;
  g.b.start = 2;
  g.b.provenance = "psi at (" + psiq::to_string(x0) + ", " + psiq::to_string(y0) + ")";
  for (int n = 2; n + 1 <= last; ++n) {
    if (sgn(p[static_cast<std::size_t>(n)]) == 0) {
      g.b.truncated_at = n;
      g.b.truncation_reason = "psi_" + std::to_string(n) + " vanishes at the point";
      break;
    }
    const auto i = static_cast<std::size_t>(n);
    g.b.push(p[i + 1] * p[i - 1] / (p[i] * p[i]));
  }
  return g;
}

ResidualReport sixth_order_report(const GenericPointData& g, int n_lo, int n_hi) {
  ResidualReport r;
  r.identity = "sixth-order";
  const auto& q = g.params;
  for (int n = std::max(n_lo, 5); n <= n_hi; ++n) {
    if (!g.b.has(n - 3) || !g.b.has(n + 3)) {
      r.add_skipped(std::to_string(n), "b_" + std::to_string(n + 3) + " not computed");
      continue;
    }
    auto b = [&](int k) -> const BigRational& { return g.b.at(n + k); };
    const BigRational pi = b(-2) * b(-2) * b(-1) * b(-1) * b(-1) * b(0) * b(0) * b(0) * b(0) * b(1) * b(1) * b(1) *
                           b(2) * b(2);
    const BigRational res = q.A * b(3) * b(-3) * pi -
                            q.B * b(-2) * b(-1) * b(-1) * b(0) * b(0) * b(0) * b(1) * b(1) * b(2) +
                            q.C * b(-1) * b(0) * b(0) * b(1) - q.D * b(0) + q.E;
    add_rational(r, n, res);
  }
  return r;
}

std::vector<std::complex<double>> polynomial_roots(const QPoly& p, int max_iterations) {
  using C = std::complex<double>;
  const int deg = p.degree();
  if (deg < 1) return {};
  std::vector<C> a(static_cast<std::size_t>(deg) + 1);
  const double lead = to_double(p.leading());
  for (int k = 0; k <= deg; ++k) a[static_cast<std::size_t>(k)] = to_double(p.coefficient(k)) / lead;
  double bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
  bound = 1 + bound;
  auto eval = [&](C z, C& dz) {
    C v = a.back();
    dz = 0;
    for (int k = deg - 1; k >= 0; --k) {
      dz = dz * z + v;
      v = v * z + a[static_cast<std::size_t>(k)];
    }
    return v;
  };
  std::vector<C> z(static_cast<std::size_t>(deg));
  for (int k = 0; k < deg; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(0.5 * bound, 2 * std::numbers::pi * (k + 0.25) / deg);
  for (int it = 0; it < max_iterations; ++it) {
    double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      C dv;
      const C v = eval(z[i], dv);
      if (v == C(0)) continue;
      const C ratio = v / dv;
      C sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const C step = ratio / (1.0 - ratio * sum);
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

FourthOrderExploration fourth_order_exploration(const PsiTable& t, int n_lo, int n_hi, double tolerance) {
  using C = std::complex<double>;
  FourthOrderExploration out;
  out.report.identity = "fourth-order";
  out.report.exact = false;
  out.report.gating = false;
  out.report.tolerance = tolerance;
  const QPoly& a4 = t.alpha(4);
  out.roots = polynomial_roots(a4);

  // Every psi_n is y times a polynomial in x, and the y factors cancel in b_n.
  const int top = t.size();
  std::vector<QPoly> reduced(static_cast<std::size_t>(top) + 1);
  for (int n = 2; n <= top; ++n) reduced[static_cast<std::size_t>(n)] = divmod(t.psi(n).odd(), a4).remainder;

  for (const C& root : out.roots) {
    double mass = 0;
    for (int k = 0; k <= a4.degree(); ++k) mass += std::fabs(to_double(a4.coefficient(k))) * std::pow(std::abs(root), k);
    if (std::abs(a4.evaluate(root)) > 1e-10 * mass) continue;
    std::vector<C> o(static_cast<std::size_t>(top) + 1);
    std::vector<bool> vanishes(static_cast<std::size_t>(top) + 1, false);
    for (int n = 2; n <= top; ++n) {
      const QPoly& p = reduced[static_cast<std::size_t>(n)];
      const auto i = static_cast<std::size_t>(n);
      o[i] = p.evaluate(root);
      // A shared factor with alpha_4 means psi_n vanishes at some root; the
      // numeric value decides whether this root is one of them.
      if (p.is_zero()) {
        vanishes[i] = true;
      } else if (gcd(p, a4).degree() > 0) {
        double pm = 0;
        for (int k = 0; k <= p.degree(); ++k)
          pm += std::fabs(to_double(p.coefficient(k))) * std::pow(std::abs(root), k);
        vanishes[i] = std::abs(o[i]) <= 1e-6 * pm;
      }
    }
    if (vanishes[2] || vanishes[3] || vanishes[5] || vanishes[6]) continue;
    out.point = root;
    // Both sides are formed exactly in Q[x] / (alpha_4); only the final
    // values are evaluated at the root.
    auto mul = [&](const QPoly& u, const QPoly& v) { return divmod(u * v, a4).remainder; };
    auto r = [&](int k) -> const QPoly& { return reduced[static_cast<std::size_t>(k)]; };
    const QPoly B = mul(mul(r(5), r(3)), mul(r(2), r(2)));
    const QPoly Cc = mul(mul(r(5), r(3)), mul(r(3), r(3)));
    const QPoly D = mul(mul(r(6), r(3)), mul(r(3), r(2)));
    for (int n = std::max(n_lo, 8); n <= n_hi; ++n) {
      if (n + 3 > top) {
        out.report.add_skipped(std::to_string(n), "psi_" + std::to_string(n + 3) + " not in table");
        continue;
      }
      bool degenerate = false;
      for (int k = n - 3; k <= n + 3; ++k)
        if (vanishes[static_cast<std::size_t>(k)]) degenerate = true;
      std::vector<QPoly> b(5);
      for (int k = -2; k <= 2 && !degenerate; ++k) {
        const auto inv = inverse_mod(mul(r(n + k), r(n + k)), a4);
        if (!inv) {
          degenerate = true;
          break;
        }
        b[static_cast<std::size_t>(k + 2)] = mul(mul(r(n + k + 1), r(n + k - 1)), *inv);
      }
      const auto den = degenerate ? std::nullopt
                                  : inverse_mod(mul(mul(mul(b[1], b[1]), mul(b[2], b[2])),
                                                    mul(mul(b[2], b[3]), b[3])),
                                                a4);
      if (degenerate || !den) {
        out.report.add_skipped(std::to_string(n), "psi vanishes near the root");
        continue;
      }
      const QPoly lhs = mul(B, mul(b[4], b[0]));
      const QPoly rhs = mul(mul(Cc, mul(mul(b[1], b[2]), mul(b[2], b[3]))) - mul(D, b[2]), *den);
      const C l = lhs.evaluate(root), rv = rhs.evaluate(root), diff = (lhs - rhs).evaluate(root);
      const double rel = std::abs(diff) / std::max({std::abs(l), std::abs(rv), 1e-300});
      out.report.add_numeric(std::to_string(n), rel, "relative");
    }
    break;
  }
  if (!out.point) out.report.add_skipped("-", "degenerate: psi_2, psi_3, psi_5 or psi_6 vanishes at every root of alpha_4");
  return out;
}

}  // namespace psiq::genus2
