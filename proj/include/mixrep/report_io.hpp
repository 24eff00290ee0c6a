#pragma once

// JSON and CSV forms of probe reports. Slacks are printed with 12
// significant digits; infinite slacks become the strings "inf" / "-inf".

#include "mixrep/probes.hpp"

#include <json.hpp>

#include <cmath>
#include <ostream>
#include <string>

namespace mixrep {

using Json = nlohmann::ordered_json;

inline Json json_number(double v) {
  if (!std::isfinite(v)) return format_double(v);
  return std::stod(format_double(v));
}

inline Json to_json(const ProbeRow& row) {
  return Json{{"id", row.id}, {"slack", json_number(row.slack)}, {"verdict", row.pass ? "pass" : "fail"}};
}

/// Summary form: counts, min slack, violations with witnesses. Rows are left
/// to the CSV.
inline Json to_json(const ProbeReport& rep) {
  Json j;
  j["construction"] = rep.construction;
  j["probe"] = rep.probe;
  j["passed"] = rep.passed();
  j["tested"] = rep.tested;
  j["min_slack"] = json_number(rep.min_slack);
  j["violations"] = Json::array();
  for (const auto& v : rep.violations) j["violations"].push_back(to_json(v));
  j["skipped"] = rep.skipped;
  j["errors"] = rep.errors;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kProbeCsvHeader = "probe,id,slack,verdict\n";

inline void write_csv_rows(std::ostream& os, const ProbeReport& rep) {
  for (const auto& row : rep.rows) {
    os << csv_field(rep.probe) << ',' << csv_field(row.id) << ',' << format_double(row.slack) << ','
       << (row.pass ? "pass" : "fail") << '\n';
  }
}

inline void write_csv(std::ostream& os, const ProbeReport& rep) {
  os << kProbeCsvHeader;
  write_csv_rows(os, rep);
}

}  // namespace mixrep
