#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psiq/psiq.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

int report_error(int status) {
  std::cerr << "psiq: " << psiq_last_error() << " (status " << status << ")\n";
  return status == PSIQ_CHECK_FAILED ? kExitFail : kExitBadInput;
}

bool read_all(const std::string& path, std::string& text) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) return false;
    buf << in.rdbuf();
  }
  text = buf.str();
  return true;
}

struct SpecsGuard {
  psiq_specs* p = nullptr;
  ~SpecsGuard() { psiq_specs_free(p); }
};

struct ReportGuard {
  psiq_report* p = nullptr;
  ~ReportGuard() { psiq_report_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of elliptic and genus-2 division polynomials and their difference equations"};
  app.set_version_flag("--version", psiq_version());

  std::vector<std::string> suites;
  std::vector<std::string> curve_paths;
  int random_curves = 0;
  std::uint64_t seed = 1;
  std::string kind = "genus2";
  psiq_options options = psiq_default_options();
  std::string format = "json";
  bool timing = false;
  bool list = false;

  std::vector<std::string> suite_names;
  for (size_t i = 0; const char* name = psiq_suite_name(i); ++i) suite_names.emplace_back(name);

  app.add_option("--suite", suites, "Suite to run; repeatable")->check(CLI::IsMember(suite_names));
  app.add_option("--curve", curve_paths, "Curve spec JSON file, '-' for stdin; repeatable");
  app.add_option("--random-curves", random_curves, "Number of seeded random curves")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for --random-curves");
  app.add_option("--kind", kind, "Kind of random curves")->check(CLI::IsMember({"elliptic", "genus2"}));
  app.add_option("--n-max", options.n_max, "Largest index checked")->check(CLI::Range(6, 40));
  app.add_option("--tol", options.tolerance, "Tolerance of numeric checks")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_flag("--timing", timing, "Record elapsed time per suite and curve");
  app.add_flag("--list-suites", list, "Print the suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitBadInput;
  }

  if (list) {
    for (const auto& s : suite_names) std::cout << s << '\n';
    return kExitPass;
  }
  if (suites.empty()) {
    std::cerr << "psiq: at least one --suite is required\n";
    return kExitBadInput;
  }
  if (curve_paths.empty() && random_curves == 0) {
    std::cerr << "psiq: give --curve or --random-curves\n";
    return kExitBadInput;
  }
  options.timing = timing ? 1 : 0;

  SpecsGuard specs;
  for (const auto& path : curve_paths) {
    std::string text;
    if (!read_all(path, text)) {
      std::cerr << "psiq: cannot read " << path << '\n';
      return kExitBadInput;
    }
    SpecsGuard parsed;
    if (int s = psiq_specs_parse(text.c_str(), &parsed.p); s != PSIQ_OK) return report_error(s);
    if (!specs.p) {
      std::swap(specs.p, parsed.p);
    } else if (int s2 = psiq_specs_append(specs.p, parsed.p); s2 != PSIQ_OK) {
      return report_error(s2);
    }
  }
  if (random_curves > 0) {
    SpecsGuard generated;
    const auto k = kind == "elliptic" ? PSIQ_ELLIPTIC : PSIQ_GENUS2;
    if (int s = psiq_specs_random(k, random_curves, seed, &generated.p); s != PSIQ_OK) return report_error(s);
    if (!specs.p) {
      std::swap(specs.p, generated.p);
    } else if (int s2 = psiq_specs_append(specs.p, generated.p); s2 != PSIQ_OK) {
      return report_error(s2);
    }
  }

  ReportGuard all;
  for (const auto& suite : suites) {
    ReportGuard one;
    const int s = psiq_run_suite(specs.p, suite.c_str(), &options, &one.p);
    if (s != PSIQ_OK && s != PSIQ_CHECK_FAILED) return report_error(s);
    if (!all.p) {
      std::swap(all.p, one.p);
    } else if (int s2 = psiq_report_merge(all.p, one.p); s2 != PSIQ_OK) {
      return report_error(s2);
    }
  }

  char* text = nullptr;
  if (int s = psiq_report_emit(all.p, format.c_str(), &text); s != PSIQ_OK) return report_error(s);
  std::fputs(text, stdout);
  psiq_string_free(text);
  return psiq_report_passed(all.p) ? kExitPass : kExitFail;
}
