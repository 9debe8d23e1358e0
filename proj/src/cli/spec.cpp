#include "psiq/cli/spec.hpp"

#include <charconv>
#include <random>
#include <cctype>

#include <json.hpp>

namespace psiq::cli {

namespace {

using nlohmann::json;

BigRational rational_field(const json& doc, const std::string& where) {
  if (!doc.is_string()) throw SpecError(SpecErrorKind::kMalformedRational, where + ": expected a \"p/q\" string");
  try {
    return parse_rational(doc.get<std::string>());
  } catch (const ParseError& e) {
    throw SpecError(SpecErrorKind::kMalformedRational, where + ": " + e.what());
  }
}

const json& required(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SpecError(SpecErrorKind::kMalformedDocument, std::string("missing field \"") + key + "\"");
  return *it;
}

CurveSpec parse_one(const json& doc) {
  if (!doc.is_object()) throw SpecError(SpecErrorKind::kMalformedDocument, "curve spec must be an object");
  const json& kind = required(doc, "kind");
  CurveSpec spec;
  if (kind == "elliptic") {
    spec.kind = CurveKind::kElliptic;
  } else if (kind == "genus2") {
    spec.kind = CurveKind::kGenus2;
  } else {
    throw SpecError(SpecErrorKind::kMalformedDocument, "kind must be \"elliptic\" or \"genus2\"");
  }

  std::vector<BigRational> point;
  if (auto it = doc.find("point"); it != doc.end()) {
    if (!it->is_array() || it->empty() || it->size() > 2)
      throw SpecError(SpecErrorKind::kMalformedDocument, "point must be [x0] or [x0, y0]");
    for (std::size_t i = 0; i < it->size(); ++i)
      point.push_back(rational_field((*it)[i], "point[" + std::to_string(i) + "]"));
  }

  if (spec.kind == CurveKind::kElliptic) {
    if (auto it = doc.find("lattice"); it != doc.end()) {
      if (!it->is_array() || it->size() != 2 || !(*it)[0].is_string() || !(*it)[1].is_string())
        throw SpecError(SpecErrorKind::kBadLattice, "lattice must be two complex strings");
      elliptic::PeriodLattice l{parse_complex((*it)[0].get<std::string>()),
                                parse_complex((*it)[1].get<std::string>())};
      try {
        elliptic::WeierstrassFunctions check(l);
      } catch (const DomainError& e) {
        throw SpecError(SpecErrorKind::kBadLattice, std::string("lattice: ") + e.what());
      }
      spec.lattice = l;
    }
    const bool has_g = doc.contains("g2") || doc.contains("g3");
    if (has_g || !spec.lattice) {
      const BigRational g2 = rational_field(required(doc, "g2"), "g2");
      const BigRational g3 = rational_field(required(doc, "g3"), "g3");
      try {
        spec.elliptic.emplace(g2, g3);
      } catch (const DomainError& e) {
        throw SpecError(SpecErrorKind::kSingularCurve, e.what());
      }
    }
    if (!point.empty()) {
      if (point.size() != 2) throw SpecError(SpecErrorKind::kMalformedDocument, "elliptic point needs x0 and y0");
      if (!spec.elliptic) throw SpecError(SpecErrorKind::kMalformedDocument, "a point needs g2 and g3");
      if (!spec.elliptic->contains(point[0], point[1]))
        throw SpecError(SpecErrorKind::kOffCurvePoint, "point (" + psiq::to_string(point[0]) + ", " +
                                                           psiq::to_string(point[1]) + ") is not on the curve");
      spec.x0 = point[0];
      spec.y0 = point[1];
    }
    return spec;
  }

  const json& lambda = required(doc, "lambda");
  if (!lambda.is_array() || lambda.size() != 5)
    throw SpecError(SpecErrorKind::kMalformedDocument, "lambda must list five coefficients l0..l4");
  std::array<BigRational, 5> l;
  for (std::size_t i = 0; i < 5; ++i) l[i] = rational_field(lambda[i], "lambda[" + std::to_string(i) + "]");
  try {
    spec.genus2.emplace(l);
  } catch (const DomainError& e) {
    throw SpecError(SpecErrorKind::kSingularCurve, e.what());
  }
  if (!point.empty()) {
    const BigRational y = point.size() == 2 ? point[1] : BigRational(0);
    if (!spec.genus2->contains(point[0], y))
      throw SpecError(SpecErrorKind::kOffCurvePoint,
                      "point (" + psiq::to_string(point[0]) + ", " + psiq::to_string(y) + ") is not on the curve");
    spec.x0 = point[0];
    spec.y0 = y;
  }
  return spec;
}

}  // namespace

const char* to_string(CurveKind kind) { return kind == CurveKind::kElliptic ? "elliptic" : "genus2"; }

std::string CurveSpec::describe() const {
  std::string out;
  if (kind == CurveKind::kGenus2) {
    out = "genus2 " + genus2->describe();
  } else if (elliptic) {
    out = "elliptic [" + psiq::to_string(elliptic->g2()) + "," + psiq::to_string(elliptic->g3()) + "]";
  } else {
    out = "elliptic";
  }
  if (x0) out += " at (" + psiq::to_string(*x0) + "," + psiq::to_string(y0.value_or(BigRational(0))) + ")";
  if (lattice) {
    char buf[128];
    std::snprintf(buf, sizeof buf, " lattice (%.6g%+.6gi, %.6g%+.6gi)", lattice->omega1.real(), lattice->omega1.imag(),
                  lattice->omega2.real(), lattice->omega2.imag());
    out += buf;
  }
  return out;
}

std::vector<CurveSpec> parse_curve_specs(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(SpecErrorKind::kMalformedDocument, std::string("invalid JSON: ") + e.what());
  }
  std::vector<CurveSpec> out;
  if (doc.is_array()) {
    if (doc.empty()) throw SpecError(SpecErrorKind::kMalformedDocument, "empty curve list");
    for (const auto& d : doc) out.push_back(parse_one(d));
  } else {
    out.push_back(parse_one(doc));
  }
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  auto fail = [&]() -> Complex {
    throw SpecError(SpecErrorKind::kBadLattice, "malformed complex number \"" + text + "\"");
  };
  // A decimal that must span the whole string; a bare sign stands for 1.
  auto number = [&](const std::string& s, bool imaginary) {
    if (imaginary && (s.empty() || s == "+")) return 1.0;
    if (imaginary && s == "-") return -1.0;
    double v = 0;
    const char* first = s.data() + (!s.empty() && s[0] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail();
    return v;
  };
  if (t.empty()) return fail();
  if (t.back() != 'i') return {number(t, false), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, number(t, true)};
  return {number(t.substr(0, split), false), number(t.substr(split), true)};
}

std::vector<CurveSpec> random_curve_specs(CurveKind kind, int count, std::uint64_t seed) {
  if (count < 0) throw DomainError("curve count must be non-negative");
  std::mt19937_64 rng(seed);
  auto rational = [&](long h, bool nonzero) {
    std::uniform_int_distribution<long> num(-h, h), den(1, h);
    for (;;) {
      BigRational r(num(rng), den(rng));
      r.canonicalize();
      if (!nonzero || sgn(r) != 0) return r;
    }
  };
  std::vector<CurveSpec> out;
  while (static_cast<int>(out.size()) < count) {
    CurveSpec spec;
    spec.kind = kind;
    const BigRational x0 = rational(6, true), y0 = rational(6, true);
    try {
      if (kind == CurveKind::kElliptic) {
        spec.elliptic = elliptic::RationalCurve::through_point(rational(9, false), x0, y0);
      } else {
        // lambda_0 = 0 and lambda_1 chosen so that (x0, y0) lies on the curve.
        const BigRational l2 = rational(6, false), l3 = rational(6, false), l4 = rational(6, false);
        const BigRational rest = x0 * x0 * (l2 + x0 * (l3 + x0 * (l4 + x0)));
        spec.genus2.emplace(std::array<BigRational, 5>{BigRational(0), BigRational((y0 * y0 - rest) / x0), l2, l3, l4});
      }
    } catch (const DomainError&) {
      continue;
    }
    spec.x0 = x0;
    spec.y0 = y0;
    out.push_back(std::move(spec));
  }
  return out;
}

std::optional<BigRational> find_rational_root(const QPoly& f, long bound) {
  if (f.is_zero()) return BigRational(0);
  if (sgn(f.coefficient(0)) == 0) return BigRational(0);
  for (long q = 1; q <= bound; ++q)
    for (long p = 1; p <= bound; ++p)
      for (long s : {1L, -1L}) {
        BigRational x(s * p, q);
        x.canonicalize();
        if (x.get_den() != q) continue;
        if (sgn(f(x)) == 0) return x;
      }
  return std::nullopt;
}

std::optional<std::pair<BigRational, BigRational>> find_rational_point(const genus2::HyperellipticCurve& c,
                                                                       long bound) {
  for (long q = 1; q <= bound; ++q)
    for (long p = 0; p <= bound; ++p)
      for (long s : {1L, -1L}) {
        if (p == 0 && s < 0) continue;
        BigRational x(s * p, q);
        x.canonicalize();
        if (x.get_den() != q) continue;
        BigRational y;
        const BigRational v = c.f()(x);
        if (sgn(v) > 0 && exact_root(v, 2, y)) return std::pair{x, y};
      }
  return std::nullopt;
}

}  // namespace psiq::cli
