#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "psiq/cli/suites.hpp"

namespace psiq::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

ojson check_json(const ResidualReport& r) {
  ojson c;
  c["identity"] = r.identity;
  c["exact"] = r.exact;
  c["gating"] = r.gating;
  c["passed"] = r.passed();
  c["evaluated"] = r.evaluated();
  if (r.exact) {
    c["exact_zero"] = r.exact_zero();
  } else {
    c["tolerance"] = decimal(r.tolerance);
    c["max_norm"] = decimal(r.max_norm());
  }
  c["failures"] = r.failures();
  ojson entries = ojson::array();
  for (const auto& e : r.entries) {
    ojson j;
    j["index"] = e.index;
    if (e.skipped) {
      j["skipped"] = true;
    } else {
      j["residual"] = e.residual;
      j["zero"] = e.zero;
    }
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
  }
  c["entries"] = std::move(entries);
  return c;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string emit_json(const std::vector<SuiteReport>& reports) {
  ojson root;
  bool all = true;
  ojson list = ojson::array();
  for (const auto& r : reports) {
    ojson j;
    j["suite"] = r.suite;
    j["curve"] = r.curve;
    j["passed"] = r.passed();
    all = all && r.passed();
    ojson info = ojson::object();
    for (const auto& [k, v] : r.info) info[k] = v;
    j["info"] = std::move(info);
    ojson checks = ojson::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
    ojson seqs = ojson::array();
    for (const auto& s : r.sequences) {
      ojson values = ojson::array();
      for (const auto& [i, v] : s.values) values.push_back(ojson::array({i, v}));
      seqs.push_back(ojson{{"name", s.name}, {"values", std::move(values)}});
    }
    j["sequences"] = std::move(seqs);
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    list.push_back(std::move(j));
  }
  root["passed"] = all;
  root["reports"] = std::move(list);
  return root.dump(2) + "\n";
}

std::string emit_csv(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  out << "suite,identity,index,residual,exact_flag\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks)
      for (const auto& e : c.entries)
        out << csv_field(r.suite) << ',' << csv_field(c.identity) << ',' << csv_field(e.index) << ','
            << csv_field(e.skipped ? "skipped" : e.residual) << ',' << (!e.skipped && c.exact && e.zero ? "true" : "false")
            << '\n';
    for (const auto& s : r.sequences)
      for (const auto& [i, v] : s.values)
        out << csv_field(r.suite) << ',' << csv_field("sequence:" + s.name) << ',' << i << ',' << csv_field(v)
            << ",true\n";
    if (r.elapsed_ms) out << csv_field(r.suite) << ",elapsed_ms,-," << decimal(*r.elapsed_ms) << ",false\n";
  }
  return out.str();
}

std::string emit_human(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  " << r.curve;
    if (r.elapsed_ms) out << "  (" << decimal(*r.elapsed_ms) << " ms)";
    out << '\n';
    for (const auto& c : r.checks) {
      out << "  " << (c.passed() ? "ok   " : (c.gating ? "FAIL " : "note ")) << c.identity << ": " << c.evaluated()
          << " evaluated";
      if (!c.exact) out << ", max " << decimal(c.max_norm()) << " (tol " << decimal(c.tolerance) << ")";
      const auto f = c.failures();
      if (!f.empty()) {
        out << ", nonzero at";
        for (const auto& i : f) out << ' ' << i;
      }
      if (!c.gating) out << " [non-gating]";
      out << '\n';
    }
    for (const auto& [k, v] : r.info) out << "  " << k << " = " << v << '\n';
    for (const auto& s : r.sequences) {
      out << "  sequence " << s.name << ':';
      for (const auto& [i, v] : s.values) out << ' ' << i << ':' << v;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "human") return ReportFormat::kHuman;
  throw DomainError("unknown format \"" + name + "\"");
}

std::string emit_report(const std::vector<SuiteReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return emit_json(reports);
    case ReportFormat::kCsv: return emit_csv(reports);
    case ReportFormat::kHuman: return emit_human(reports);
  }
  return {};
}

}  // namespace psiq::cli
