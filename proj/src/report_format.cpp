#include <sstream>

#include <json.hpp>

#include "kdvgal/errors.hpp"
#include "kdvgal/report.hpp"

namespace kdvgal {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown output format '" + name + "' (table, json, csv)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string table(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "# " << r.identity << "  gmax=" << r.gmax << " nmax=" << r.nmax << " kmax=" << r.kmax
        << " qmax=" << r.qmax << "\n# window: " << r.window << "\n";
    for (const auto& c : r.records) {
      out << (c.ok ? "ok   " : "FAIL ") << c.identity << "  " << c.location << "  lhs=" << c.lhs << "  rhs=" << c.rhs
          << "\n";
    }
  }
  for (const auto& r : reports) {
    out << r.identity << ": " << r.passed() << " passed, " << r.failed() << " failed";
    if (const CheckRecord* f = r.first_failure()) {
      out << "; first failure " << f->identity << " at " << f->location << " (lhs=" << f->lhs << ", rhs=" << f->rhs
          << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json jr;
    jr["identity"] = r.identity;
    jr["gmax"] = r.gmax;
    jr["nmax"] = r.nmax;
    jr["kmax"] = r.kmax;
    jr["qmax"] = r.qmax;
    jr["window"] = r.window;
    jr["passed"] = r.passed();
    jr["failed"] = r.failed();
    jr["ok"] = r.ok();
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& c : r.records) {
      nlohmann::ordered_json jc;
      jc["identity"] = c.identity;
      jc["location"] = c.location;
      if (c.g >= 0) jc["g"] = c.g;
      jc["ks"] = c.ks;
      jc["lhs"] = c.lhs;
      jc["rhs"] = c.rhs;
      jc["ok"] = c.ok;
      recs.push_back(std::move(jc));
    }
    jr["records"] = std::move(recs);
    doc.push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

std::string csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "report,identity,location,g,ks,lhs,rhs,ok\n";
  for (const auto& r : reports) {
    for (const auto& c : r.records) {
      out << csv_field(r.identity) << ',' << csv_field(c.identity) << ',' << csv_field(c.location) << ','
          << (c.g >= 0 ? std::to_string(c.g) : "") << ',' << csv_field(ks_label(c.ks)) << ',' << csv_field(c.lhs)
          << ',' << csv_field(c.rhs) << ',' << (c.ok ? "true" : "false") << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return table(reports);
    case OutputFormat::Json:
      return json(reports);
    case OutputFormat::Csv:
      break;
  }
  return csv(reports);
}

}  // namespace kdvgal
