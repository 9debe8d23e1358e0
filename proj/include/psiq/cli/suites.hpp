#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psiq/cli/spec.hpp"
#include "psiq/seq/residual_report.hpp"

namespace psiq::cli {

enum class Suite {
  kEllipticIdentities,
  kEllipticNumeric,
  kG2Calibrate,
  kG2Identities,
  kG2Dp1,
  kG2ThirdOrder,
  kG2SixthOrder,
  kSeqRoundtrip,
};

const std::vector<std::pair<Suite, const char*>>& suite_names();
const char* to_string(Suite suite);
// Throws DomainError for an unknown name.
Suite parse_suite(const std::string& name);

struct SuiteOptions {
  int n_max = 10;
  double tolerance = 1e-8;
  bool timing = false;
};

struct NamedSequence {
  std::string name;
  // (index, exact value) pairs.
  std::vector<std::pair<int, std::string>> values;
};

struct SuiteReport {
  std::string suite;
  std::string curve;
  std::vector<ResidualReport> checks;
  // Ordered key/value facts such as equation parameters.
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<NamedSequence> sequences;
  std::optional<double> elapsed_ms;

  // Every gating check passed.
  bool passed() const;
};

// Thrown when a suite cannot run on the given spec: wrong curve kind, or a
// required point that neither the spec nor a small search provides.
class SuiteMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

SuiteReport run_suite(const CurveSpec& spec, Suite suite, const SuiteOptions& options);

enum class ReportFormat { kJson, kCsv, kHuman };
// Throws DomainError for an unknown name.
ReportFormat parse_format(const std::string& name);

// Byte-deterministic given the same reports; timing appears only when the
// reports carry it.
std::string emit_report(const std::vector<SuiteReport>& reports, ReportFormat format);

}  // namespace psiq::cli
