#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psiq/elliptic/lattice.hpp"
#include "psiq/genus2/curve.hpp"

namespace psiq::cli {

enum class CurveKind { kElliptic, kGenus2 };

const char* to_string(CurveKind kind);

// Why a curve document was rejected; each kind has its own diagnostic and
// C status code.
enum class SpecErrorKind { kMalformedDocument, kMalformedRational, kSingularCurve, kOffCurvePoint, kBadLattice };

class SpecError : public ParseError {
 public:
  SpecError(SpecErrorKind kind, const std::string& message) : ParseError(message), kind_(kind) {}
  SpecErrorKind kind() const { return kind_; }

 private:
  SpecErrorKind kind_;
};

// One curve document:
//   {"kind": "elliptic", "g2": "4", "g3": "0", "point": ["1", "2"],
//    "lattice": ["6", "1.8+6.6i"]}
//   {"kind": "genus2", "lambda": ["0", "1", "0", "0", "0"], "point": ["0"]}
// lambda[i] is the coefficient of x^i. A one-element genus-2 point names a
// Weierstrass point (x0, 0). An elliptic spec may give a lattice instead of
// g2 and g3, for the numeric suite only.
struct CurveSpec {
  CurveKind kind = CurveKind::kElliptic;
  std::optional<elliptic::RationalCurve> elliptic;
  std::optional<genus2::HyperellipticCurve> genus2;
  std::optional<BigRational> x0;
  std::optional<BigRational> y0;
  std::optional<elliptic::PeriodLattice> lattice;

  std::string describe() const;
};

// A single document or an array of them. Throws SpecError.
std::vector<CurveSpec> parse_curve_specs(const std::string& text);

// "a", "bi", "a+bi", "a-bi" with decimal a, b. Throws SpecError.
Complex parse_complex(const std::string& text);

// Seeded curves through a random rational point. Genus-2 curves also have
// lambda_0 = 0, so every generated spec offers both point types.
std::vector<CurveSpec> random_curve_specs(CurveKind kind, int count, std::uint64_t seed);

// A rational root of f, if one exists among p/q with |p|, |q| <= bound.
std::optional<BigRational> find_rational_root(const QPoly& f, long bound = 64);

// A rational point with y != 0 and small height, searched in x.
std::optional<std::pair<BigRational, BigRational>> find_rational_point(const genus2::HyperellipticCurve& c,
                                                                       long bound = 24);

}  // namespace psiq::cli
