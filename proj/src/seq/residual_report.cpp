#include "psiq/seq/residual_report.hpp"

#include <algorithm>
#include <cstdio>

#include "psiq/seq/ratio_sequence.hpp"

namespace psiq {

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kBeta: return "beta";
    case SequenceKind::kB: return "b";
    case SequenceKind::kC: return "c";
    case SequenceKind::kD: return "d";
    case SequenceKind::kAlpha: return "alpha";
    case SequenceKind::kPsiValue: return "psi";
  }
  return "unknown";
}

void ResidualReport::add_exact(std::string index, std::string residual, double magnitude, bool zero) {
  ResidualEntry e;
  e.index = std::move(index);
  e.residual = std::move(residual);
  e.magnitude = magnitude;
  e.zero = zero;
  entries.push_back(std::move(e));
}

void ResidualReport::add_numeric(std::string index, double magnitude, std::string note) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", magnitude);
  ResidualEntry e;
  e.index = std::move(index);
  e.residual = buf;
  e.magnitude = magnitude;
  e.zero = false;
  e.note = std::move(note);
  entries.push_back(std::move(e));
}

void ResidualReport::add_skipped(std::string index, std::string note) {
  ResidualEntry e;
  e.index = std::move(index);
  e.residual = "skipped";
  e.skipped = true;
  e.note = std::move(note);
  entries.push_back(std::move(e));
}

double ResidualReport::max_norm() const {
  double m = 0.0;
  for (const auto& e : entries)
    if (!e.skipped) m = std::max(m, e.magnitude);
  return m;
}

bool ResidualReport::exact_zero() const {
  if (!exact) return false;
  return std::all_of(entries.begin(), entries.end(), [](const ResidualEntry& e) { return e.skipped || e.zero; });
}

std::vector<std::string> ResidualReport::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.skipped) continue;
    const bool ok = exact ? e.zero : e.magnitude < tolerance;
    if (!ok) out.push_back(e.index);
  }
  return out;
}

std::size_t ResidualReport::evaluated() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const ResidualEntry& e) { return !e.skipped; }));
}

bool ResidualReport::passed() const { return evaluated() > 0 && failures().empty(); }

}  // namespace psiq
