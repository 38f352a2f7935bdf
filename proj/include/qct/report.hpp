#pragma once

// Machine-readable result record for a single verification check, shared by
// the library-level consistency checks, the suite runner, and the CLI.

#include <string>
#include <vector>

namespace qct {

struct VerificationReport {
  std::string suite;       // suite the check belongs to (exactly one)
  std::string check_name;  // stable dotted identifier, e.g. "kernel.series_vs_closed"
  std::string anchor;      // self-contained mathematical identity being verified
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;  // the bound the errors are held against
  bool pass = false;
  double runtime_ms = 0.0;  // zero unless timing collection is enabled
};

// Serialization (implemented in the suite library, not header-only):
// one JSON object per line for report.jsonl, and a flat CSV table.
std::string report_jsonl_line(const VerificationReport& report);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report);

}  // namespace qct
