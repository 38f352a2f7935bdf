// Command-line verification harness: runs one named check suite (or all of
// them), writes report.jsonl / report.csv (+ plot CSVs for the spectrum
// suite), and exits 0 only if every check passed.
//
//   verify --suite spectrum [--config file] [--out dir] [--seed n] [--timings]
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
// configuration error.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qct/suite.hpp"

namespace {

std::string suite_list() {
  std::string out;
  for (const std::string& name : qct::suite_names()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical verification harness for the weighted slice Cauchy "
      "transform library"};

  std::string suite;
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool timings = false;

  auto* suite_opt =
      app.add_option("--suite", suite, "Suite to run: " + suite_list());
  auto* config_opt = app.add_option(
      "--config", config_path, "Key = value configuration file");
  auto* out_opt =
      app.add_option("--out", out_dir, "Report directory (default: reports)");
  auto* seed_opt =
      app.add_option("--seed", seed, "Seed for randomized probe points");
  app.add_flag("--timings", timings,
               "Record wall-clock runtimes in the reports (off by default so "
               "reruns are byte-identical)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::fprintf(stderr, "%s\n", error.what());
    return 2;
  }

  qct::SuiteConfig config;
  try {
    // Precedence: defaults, then the config file, then explicit flags.
    if (*config_opt) qct::apply_config_file(config, config_path);
    if (*suite_opt) config.suite = suite;
    if (*out_opt) config.output_dir = out_dir;
    if (*seed_opt) config.seed = seed;
    if (timings) config.timings = true;

    const bool known =
        [&] {
          for (const std::string& name : qct::suite_names())
            if (name == config.suite) return true;
          return false;
        }();
    if (!known) {
      std::fprintf(stderr, "unknown suite '%s' (expected one of: %s)\n",
                   config.suite.c_str(), suite_list().c_str());
      return 2;
    }
  } catch (const std::exception& error) {
    std::fprintf(stderr, "%s\n", error.what());
    return 2;
  }

  std::vector<qct::VerificationReport> reports;
  try {
    reports = qct::run_suite(config);
    qct::write_report_files(reports, config);
  } catch (const std::exception& error) {
    std::fprintf(stderr, "%s\n", error.what());
    return 2;
  }

  int failed = 0;
  for (const qct::VerificationReport& report : reports) {
    if (!report.pass) ++failed;
    std::printf("[%s] %-38s abs %.3e  rel %.3e  tol %.1e\n",
                report.pass ? "PASS" : "FAIL", report.check_name.c_str(),
                report.max_abs_err, report.max_rel_err, report.tolerance);
  }
  std::printf("%zu checks, %d failed; reports in %s\n", reports.size(), failed,
              config.output_dir.string().c_str());
  return qct::exit_code_for(reports);
}
