#pragma once

#include <string>
#include <vector>

namespace psiq {

struct ResidualEntry {
  std::string index;
  // Exact rational string for exact checks, decimal for numeric ones.
  std::string residual;
  double magnitude = 0.0;
  bool zero = false;
  // Set when the entry was skipped because a denominator vanished.
  bool skipped = false;
  std::string note;
};

// Outcome of one identity over a range of indices. Exact reports pass iff
// every evaluated residual is exactly zero; numeric reports pass iff the
// largest magnitude is below the tolerance.
struct ResidualReport {
  std::string identity;
  std::string curve;
  bool exact = true;
  double tolerance = 0.0;
  // Non-gating reports are shown but never fail a suite.
  bool gating = true;
  std::vector<ResidualEntry> entries;

  void add_exact(std::string index, std::string residual, double magnitude, bool zero);
  void add_numeric(std::string index, double magnitude, std::string note = {});
  void add_skipped(std::string index, std::string note);

  double max_norm() const;
  // True iff every evaluated entry is an exact zero (numeric reports: false).
  bool exact_zero() const;
  std::vector<std::string> failures() const;
  std::size_t evaluated() const;
  bool passed() const;
};

}  // namespace psiq
