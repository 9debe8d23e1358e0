#include "doctest.h"
#include "psiq/cli/suites.hpp"

using namespace psiq;
using namespace psiq::cli;

namespace {

SpecErrorKind error_kind(const std::string& text) {
  try {
    parse_curve_specs(text);
  } catch (const SpecError& e) {
    return e.kind();
  }
  FAIL("document was accepted: " << text);
  return SpecErrorKind::kMalformedDocument;
}

}  // namespace

TEST_CASE("curve documents parse exactly") {
  const auto g = parse_curve_specs(R"({"kind":"genus2","lambda":["0","1","0","0","0"]})");
  REQUIRE(g.size() == 1);
  CHECK(g[0].kind == CurveKind::kGenus2);
  CHECK(g[0].genus2->f() == QPoly{BigRational(0), BigRational(1), BigRational(0), BigRational(0), BigRational(0),
                                 BigRational(1)});
  CHECK(find_rational_root(g[0].genus2->f()) == BigRational(0));

  const auto e = parse_curve_specs(R"([{"kind":"elliptic","g2":"4","g3":"0"},
                                       {"kind":"elliptic","g2":"3","g3":"-8","point":["1","3"]}])");
  REQUIRE(e.size() == 2);
  CHECK(e[0].elliptic->discriminant() == 64);
  CHECK(e[1].x0 == BigRational(1));
  CHECK(e[1].y0 == BigRational(3));

  const auto w = parse_curve_specs(R"({"kind":"genus2","lambda":["-1/32","0","0","0","0"],"point":["1/2"]})");
  REQUIRE(w[0].y0.has_value());
  CHECK(sgn(*w[0].y0) == 0);

  const auto l = parse_curve_specs(R"({"kind":"elliptic","lattice":["6","1.8+6.6i"]})");
  CHECK_FALSE(l[0].elliptic.has_value());
  CHECK(l[0].lattice->omega2 == Complex(1.8, 6.6));
}

TEST_CASE("each rejection has its own diagnostic") {
  CHECK(error_kind(R"({"kind":"genus2","lambda":["0","0","0","0","0"]})") == SpecErrorKind::kSingularCurve);
  CHECK(error_kind(R"({"kind":"elliptic","g2":"3","g3":"1"})") == SpecErrorKind::kSingularCurve);
  CHECK(error_kind(R"({"kind":"elliptic","g2":"4","g3":"1/0"})") == SpecErrorKind::kMalformedRational);
  CHECK(error_kind(R"({"kind":"elliptic","g2":"4.5","g3":"1"})") == SpecErrorKind::kMalformedRational);
  CHECK(error_kind(R"({"kind":"elliptic","g2":4,"g3":"1"})") == SpecErrorKind::kMalformedRational);
  CHECK(error_kind(R"({"kind":"elliptic","g2":"4","g3":"1","point":["1","1"]})") == SpecErrorKind::kOffCurvePoint);
  CHECK(error_kind(R"({"kind":"genus2","lambda":["0","1","0","0","0"],"point":["1"]})") ==
        SpecErrorKind::kOffCurvePoint);
  CHECK(error_kind(R"({"kind":"elliptic","lattice":["1","2"]})") == SpecErrorKind::kBadLattice);
  CHECK(error_kind(R"({"kind":"elliptic","lattice":["1","2+xi"]})") == SpecErrorKind::kBadLattice);
  CHECK(error_kind(R"({"kind":"genus2","lambda":["0","1"]})") == SpecErrorKind::kMalformedDocument);
  CHECK(error_kind(R"({"kind":"genus3"})") == SpecErrorKind::kMalformedDocument);
  CHECK(error_kind("{not json") == SpecErrorKind::kMalformedDocument);
}

TEST_CASE("complex strings") {
  CHECK(parse_complex("3") == Complex(3, 0));
  CHECK(parse_complex("-2.5i") == Complex(0, -2.5));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("1-i") == Complex(1, -1));
  CHECK(parse_complex(" 0.5 + 1e-1i ") == Complex(0.5, 0.1));
  CHECK(parse_complex("1e+2-3i") == Complex(100, -3));
  CHECK_THROWS_AS(parse_complex(""), SpecError);
  CHECK_THROWS_AS(parse_complex("1+2j"), SpecError);
}

TEST_CASE("random curves are seeded and carry usable points") {
  const auto a = random_curve_specs(CurveKind::kGenus2, 4, 11);
  const auto b = random_curve_specs(CurveKind::kGenus2, 4, 11);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].describe() == b[i].describe());
    CHECK(sgn(a[i].genus2->lambda()[0]) == 0);
    CHECK(a[i].genus2->contains(*a[i].x0, *a[i].y0));
    CHECK(sgn(*a[i].y0) != 0);
  }
  CHECK(random_curve_specs(CurveKind::kGenus2, 1, 12)[0].describe() != a[0].describe());
  for (const auto& e : random_curve_specs(CurveKind::kElliptic, 4, 3)) CHECK(e.elliptic->contains(*e.x0, *e.y0));
}

TEST_CASE("suites check their curve kind") {
  const auto g = parse_curve_specs(R"({"kind":"genus2","lambda":["0","1","0","0","0"]})")[0];
  const auto e = parse_curve_specs(R"({"kind":"elliptic","g2":"4","g3":"1"})")[0];
  CHECK_THROWS_AS(run_suite(g, Suite::kEllipticIdentities, {}), SuiteMismatch);
  CHECK_THROWS_AS(run_suite(e, Suite::kG2Calibrate, {}), SuiteMismatch);
  CHECK_THROWS_AS(run_suite(g, Suite::kG2SixthOrder, {}), SuiteMismatch);
  CHECK_THROWS_AS(parse_suite("g2-everything"), DomainError);
}

TEST_CASE("elliptic identities pass and reports are deterministic") {
  const auto e = parse_curve_specs(R"({"kind":"elliptic","g2":"4","g3":"1"})")[0];
  const auto r1 = run_suite(e, Suite::kEllipticIdentities, {});
  const auto r2 = run_suite(e, Suite::kEllipticIdentities, {});
  CHECK(r1.passed());
  for (auto f : {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kHuman})
    CHECK(emit_report({r1}, f) == emit_report({r2}, f));
  const std::string csv = emit_report({r1}, ReportFormat::kCsv);
  CHECK(csv.rfind("suite,identity,index,residual,exact_flag\n", 0) == 0);
  CHECK(csv.find("elliptic-identities,addition-recursion,\"5,3\",0,true") != std::string::npos);
  CHECK(emit_report({r1}, ReportFormat::kJson).find("elapsed_ms") == std::string::npos);
  SuiteOptions timed;
  timed.timing = true;
  CHECK(run_suite(e, Suite::kEllipticIdentities, timed).elapsed_ms.has_value());
}

TEST_CASE("g2-calibrate reports the scale table") {
  const auto g = parse_curve_specs(R"({"kind":"genus2","lambda":["0","1","0","0","0"]})")[0];
  SuiteOptions o;
  o.n_max = 12;
  const auto r = run_suite(g, Suite::kG2Calibrate, o);
  CHECK(r.passed());
  REQUIRE(r.sequences.size() == 1);
  CHECK(r.sequences[0].name == "kappa");
  CHECK(r.sequences[0].values.front() == std::pair<int, std::string>{2, "2"});
  CHECK(r.sequences[0].values[1] == std::pair<int, std::string>{3, "4"});
  CHECK(r.sequences[0].values.back().first == 12);
}

TEST_CASE("exact suites serialize exact strings only") {
  const auto g = parse_curve_specs(R"({"kind":"genus2","lambda":["0","1","0","0","0"]})")[0];
  const auto r = run_suite(g, Suite::kG2ThirdOrder, {});
  const std::string csv = emit_report({r}, ReportFormat::kCsv);
  CHECK(csv.find('.') == std::string::npos);
  CHECK(csv.find("e+") == std::string::npos);
  CHECK_FALSE(r.passed());
  bool map_ok = false;
  for (const auto& c : r.checks)
    if (c.identity == "third-order-map") map_ok = c.passed();
  CHECK(map_ok);
}
