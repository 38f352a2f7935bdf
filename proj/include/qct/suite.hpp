#pragma once

// Verification-suite surface: the check catalog, runner configuration, and
// report/plot emission.  Implemented in src/checks.cpp, src/suite_runner.cpp
// and src/report.cpp; consumed by tools/verify.cpp and the test binaries.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qct/bergman_kernels.hpp"
#include "qct/gauss_measure.hpp"
#include "qct/report.hpp"

namespace qct {

// Shared numeric environment handed to every check.  Checks that need a
// bespoke rule (singular-kernel schemes, nested quadratures) pin their own
// constants instead, so that configuration mistakes cannot silently turn a
// verified identity into a quadrature artifact.
struct CheckContext {
  QuadratureSpec quadrature{};
  TruncationSpec truncation{48, 1e-12};
  std::uint64_t seed = 0;
};

// Errors observed by one check over all of its probes.
struct CheckOutcome {
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
};

// Which of the two recorded errors the pass/fail tolerance applies to.
enum class Gauge { absolute, relative, combined };

struct Check {
  std::string name;    // "<suite>.<slug>", unique
  std::string suite;   // exactly one owning suite
  std::string anchor;  // self-descriptive statement of the verified identity
  double tolerance = 0.0;
  Gauge gauge = Gauge::relative;
  CheckOutcome (*run)(const CheckContext&) = nullptr;
};

// Every registered check, in deterministic execution order.
const std::vector<Check>& check_catalog();

// Suite labels accepted by the runner ("all" plus the eight module suites).
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::string suite = "all";
  QuadratureSpec quadrature{};
  TruncationSpec truncation{48, 1e-12};
  std::map<std::string, double> tolerance_overrides;  // check name -> tolerance
  std::uint64_t seed = 20260819;
  std::filesystem::path output_dir = "reports";
  bool timings = false;  // off: runtime_ms is zeroed so reports are bit-stable
};

// Apply "key = value" lines from a config file on top of the current values.
// Unknown keys, malformed lines, and unknown check names under tolerance.*
// throw std::runtime_error before any computation starts.
void apply_config_file(SuiteConfig& config, const std::filesystem::path& path);

// Run every check belonging to config.suite, in catalog order.  A check that
// throws is recorded as a failure with infinite error, never as a crash.
// Unknown suite names throw std::invalid_argument.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

// Write report.jsonl and report.csv (and, for the spectrum/all suites, the
// plot CSV companions) into config.output_dir, creating it if needed.
void write_report_files(const std::vector<VerificationReport>& reports,
                        const SuiteConfig& config);

// Emit one plot-ready CSV into report_dir.  kind is one of "singular_values",
// "schatten_sums", "kernel_profile".  Requires report.jsonl to already exist
// in report_dir (std::runtime_error otherwise); unknown kinds throw
// std::invalid_argument.
void emit_plot_data(const std::filesystem::path& report_dir,
                    const std::string& kind);

// 0 when every report passed, 1 otherwise.
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace qct
