#include "psiq/psiq.h"

#include <cstring>
#include <string>

#include "psiq/cli/suites.hpp"
#include "psiq/elliptic/division.hpp"
#include "psiq/genus2/psi_table.hpp"

struct psiq_specs {
  std::vector<psiq::cli::CurveSpec> specs;
};

struct psiq_report {
  std::vector<psiq::cli::SuiteReport> reports;
};

namespace {

thread_local std::string last_error;

int fail(int code, const std::string& message) {
  last_error = message;
  return code;
}

int spec_code(psiq::cli::SpecErrorKind k) {
  using K = psiq::cli::SpecErrorKind;
  switch (k) {
    case K::kMalformedDocument: return PSIQ_ERR_DOCUMENT;
    case K::kMalformedRational: return PSIQ_ERR_RATIONAL;
    case K::kSingularCurve: return PSIQ_ERR_SINGULAR;
    case K::kOffCurvePoint: return PSIQ_ERR_OFF_CURVE;
    case K::kBadLattice: return PSIQ_ERR_LATTICE;
  }
  return PSIQ_ERR_INTERNAL;
}

// Runs body() and turns any exception into a status code.
template <class F>
int guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const psiq::cli::SpecError& e) {
    return fail(spec_code(e.kind()), e.what());
  } catch (const psiq::cli::SuiteMismatch& e) {
    return fail(PSIQ_ERR_SUITE, e.what());
  } catch (const psiq::ParseError& e) {
    return fail(PSIQ_ERR_RATIONAL, e.what());
  } catch (const psiq::DomainError& e) {
    return fail(PSIQ_ERR_ARGUMENT, e.what());
  } catch (const psiq::ArithmeticError& e) {
    return fail(PSIQ_ERR_ARITHMETIC, e.what());
  } catch (const std::exception& e) {
    return fail(PSIQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PSIQ_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

const psiq::cli::CurveSpec* spec_at(const psiq_specs* specs, size_t index, psiq::cli::CurveKind kind) {
  if (!specs || index >= specs->specs.size()) return nullptr;
  const auto& s = specs->specs[index];
  if (s.kind != kind) return nullptr;
  return &s;
}

}  // namespace

extern "C" {

const char* psiq_version(void) { return "0.1.0"; }

const char* psiq_last_error(void) { return last_error.c_str(); }

psiq_options psiq_default_options(void) { return psiq_options{10, 1e-8, 0}; }

const char* psiq_suite_name(size_t index) {
  const auto& names = psiq::cli::suite_names();
  return index < names.size() ? names[index].second : nullptr;
}

int psiq_specs_parse(const char* json, psiq_specs** out) {
  if (!json || !out) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() -> int {
    *out = new psiq_specs{psiq::cli::parse_curve_specs(json)};
    return PSIQ_OK;
  });
}

int psiq_specs_random(psiq_curve_kind kind, int count, uint64_t seed, psiq_specs** out) {
  if (!out) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  if (kind != PSIQ_ELLIPTIC && kind != PSIQ_GENUS2) return fail(PSIQ_ERR_ARGUMENT, "unknown curve kind");
  if (count <= 0) return fail(PSIQ_ERR_ARGUMENT, "curve count must be positive");
  return guarded([&]() -> int {
    const auto k = kind == PSIQ_ELLIPTIC ? psiq::cli::CurveKind::kElliptic : psiq::cli::CurveKind::kGenus2;
    *out = new psiq_specs{psiq::cli::random_curve_specs(k, count, seed)};
    return PSIQ_OK;
  });
}

size_t psiq_specs_count(const psiq_specs* specs) { return specs ? specs->specs.size() : 0; }

int psiq_specs_append(psiq_specs* into, const psiq_specs* from) {
  if (!into || !from) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  return guarded([&]() -> int {
    into->specs.insert(into->specs.end(), from->specs.begin(), from->specs.end());
    return PSIQ_OK;
  });
}

void psiq_specs_free(psiq_specs* specs) { delete specs; }

int psiq_run_suite(const psiq_specs* specs, const char* suite, const psiq_options* options, psiq_report** out) {
  if (!specs || !suite || !out) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  const psiq_options o = options ? *options : psiq_default_options();
  return guarded([&]() -> int {
    psiq::cli::Suite s;
    try {
      s = psiq::cli::parse_suite(suite);
    } catch (const psiq::DomainError& e) {
      return fail(PSIQ_ERR_SUITE, e.what());
    }
    if (o.n_max < 6 || o.n_max > 40) return fail(PSIQ_ERR_ARGUMENT, "n_max must lie in [6, 40]");
    if (!(o.tolerance > 0)) return fail(PSIQ_ERR_ARGUMENT, "tolerance must be positive");
    const psiq::cli::SuiteOptions so{o.n_max, o.tolerance, o.timing != 0};
    auto report = std::make_unique<psiq_report>();
    for (const auto& spec : specs->specs) report->reports.push_back(psiq::cli::run_suite(spec, s, so));
    const bool passed = psiq_report_passed(report.get()) != 0;
    *out = report.release();
    return passed ? PSIQ_OK : PSIQ_CHECK_FAILED;
  });
}

int psiq_report_merge(psiq_report* into, const psiq_report* from) {
  if (!into || !from) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  return guarded([&]() -> int {
    into->reports.insert(into->reports.end(), from->reports.begin(), from->reports.end());
    return PSIQ_OK;
  });
}

int psiq_report_passed(const psiq_report* report) {
  if (!report) return 0;
  for (const auto& r : report->reports)
    if (!r.passed()) return 0;
  return 1;
}

int psiq_report_emit(const psiq_report* report, const char* format, char** out) {
  if (!report || !format || !out) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() -> int {
    *out = duplicate(psiq::cli::emit_report(report->reports, psiq::cli::parse_format(format)));
    return PSIQ_OK;
  });
}

void psiq_report_free(psiq_report* report) { delete report; }

int psiq_elliptic_psi(const psiq_specs* specs, size_t index, int n, char** out) {
  if (!out) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  const auto* s = spec_at(specs, index, psiq::cli::CurveKind::kElliptic);
  if (!s || !s->elliptic) return fail(PSIQ_ERR_ARGUMENT, "no elliptic curve at this index");
  return guarded([&]() -> int {
    const psiq::elliptic::DivisionPolynomials<psiq::BigRational> t(*s->elliptic);
    *out = duplicate(t.psi(n).to_string());
    return PSIQ_OK;
  });
}

int psiq_genus2_alpha_at(const psiq_specs* specs, size_t index, int n, const char* x0, char** out) {
  if (!out || !x0) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  const auto* s = spec_at(specs, index, psiq::cli::CurveKind::kGenus2);
  if (!s) return fail(PSIQ_ERR_ARGUMENT, "no genus-2 curve at this index");
  if (n < 0) return fail(PSIQ_ERR_ARGUMENT, "n must be non-negative");
  return guarded([&]() -> int {
    *out = duplicate(psiq::to_string(psiq::genus2::alpha_value(*s->genus2, n, psiq::parse_rational(x0))));
    return PSIQ_OK;
  });
}

int psiq_genus2_kappa(int n, char** out) {
  if (!out) return fail(PSIQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  if (n < 2) return fail(PSIQ_ERR_ARGUMENT, "kappa is defined for n >= 2");
  return guarded([&]() -> int {
    *out = duplicate(psiq::to_string(psiq::genus2::kappa_closed_form(n)));
    return PSIQ_OK;
  });
}

void psiq_string_free(char* s) { delete[] s; }

}  // extern "C"
