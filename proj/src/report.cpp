#include "qct/report.hpp"

#include <cstdio>
#include <string>

#include <json.hpp>

namespace qct {

namespace {

// Shortest-roundtrip double via the JSON serializer keeps JSONL and CSV in
// agreement; non-finite values (a check that threw) print as inf/nan in the
// CSV and null in the JSONL, which both formats tolerate.
std::string number_field(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_jsonl_line(const VerificationReport& report) {
  nlohmann::ordered_json line;
  line["suite"] = report.suite;
  line["check_name"] = report.check_name;
  line["anchor"] = report.anchor;
  line["max_abs_err"] = report.max_abs_err;
  line["max_rel_err"] = report.max_rel_err;
  line["tolerance"] = report.tolerance;
  line["pass"] = report.pass;
  line["runtime_ms"] = report.runtime_ms;
  return line.dump();
}

std::string report_csv_header() {
  return "suite,check_name,anchor,max_abs_err,max_rel_err,tolerance,pass,"
         "runtime_ms";
}

std::string report_csv_row(const VerificationReport& report) {
  std::string row = csv_quote(report.suite);
  row += ',';
  row += csv_quote(report.check_name);
  row += ',';
  row += csv_quote(report.anchor);
  row += ',';
  row += number_field(report.max_abs_err);
  row += ',';
  row += number_field(report.max_rel_err);
  row += ',';
  row += number_field(report.tolerance);
  row += ',';
  row += report.pass ? "true" : "false";
  row += ',';
  row += number_field(report.runtime_ms);
  return row;
}

}  // namespace qct
