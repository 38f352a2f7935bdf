#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qct/cauchy_transform.hpp"
#include "qct/quaternion.hpp"
#include "qct/spectral_analysis.hpp"
#include "qct/suite.hpp"

namespace qct {
namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void config_error(int line, const std::string& message) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " +
                           message);
}

double parse_double(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    config_error(line, "expected a number, got '" + value + "'");
  }
}

int parse_int(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    config_error(line, "expected an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& value, int line) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  config_error(line, "expected true/false, got '" + value + "'");
}

bool known_check(const std::string& name) {
  for (const Check& check : check_catalog())
    if (check.name == name) return true;
  return false;
}

bool known_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void require_reports(const std::filesystem::path& report_dir) {
  if (!std::filesystem::exists(report_dir / "report.jsonl"))
    throw std::runtime_error("emit_plot_data: missing " +
                             (report_dir / "report.jsonl").string() +
                             " (run a suite into this directory first)");
}

void emit_singular_values(const std::filesystem::path& report_dir) {
  // Three series (k = 0, 1, 2) of singular-value data: the literal closed
  // form, sqrt(lambda), the Galerkin SVD value, and the large-n asymptotic.
  // The literal and sqrt(lambda) columns genuinely differ (by powers of
  // 3^{1/4}); the SVD column adjudicates in favor of sqrt(lambda).
  const OperatorMatrix matrix = build_cauchy_matrix(30, 30);
  const int n_max = 6;
  // Slot 0 stays empty: the closed rows all have n >= 1 (the n = 0 rows
  // belong to the hat family, which this table does not cover).
  std::vector<std::vector<double>> block_svd(1);
  for (int n = 1; n <= n_max; ++n)
    block_svd.push_back(svd_singular_values(pk_row_block(matrix, n)));

  std::ofstream out(report_dir / "singular_values.csv");
  out << "k,n,s_closed_literal,s_sqrt_lambda,s_numeric,lambda,asymptotic,"
         "literal_over_sqrt_lambda,sqrt_lambda_over_asymptotic\n";
  for (int k = 0; k <= 2; ++k) {
    const std::vector<SingularValueClosed> closed =
        singular_values_closed(k, n_max);
    for (const SingularValueClosed& row : closed) {
      const double lambda = lambda_eigenvalue(k, row.n);
      double numeric = std::numeric_limits<double>::quiet_NaN();
      double best = std::numeric_limits<double>::infinity();
      for (double sigma : block_svd[std::size_t(row.n)])
        if (std::abs(sigma - row.sqrt_lambda) < best) {
          best = std::abs(sigma - row.sqrt_lambda);
          numeric = sigma;
        }
      const bool has_asymptotic = row.n > k + 1;
      const double asymptotic =
          has_asymptotic ? singular_values_asymptotic(k, row.n)
                         : std::numeric_limits<double>::quiet_NaN();
      out << k << ',' << row.n << ',' << format_number(row.literal) << ','
          << format_number(row.sqrt_lambda) << ',' << format_number(numeric)
          << ',' << format_number(lambda) << ',' << format_number(asymptotic)
          << ',' << format_number(row.literal / row.sqrt_lambda) << ','
          << format_number(row.sqrt_lambda / asymptotic) << '\n';
    }
  }
}

void emit_schatten_sums(const std::filesystem::path& report_dir) {
  const OperatorMatrix matrix = build_cauchy_matrix(20, 20);
  const std::vector<double> exponents = {1.0, 2.5, 3.0};
  const SchattenDiagnostics diag = schatten_diagnostics(matrix, exponents);
  std::ofstream out(report_dir / "schatten_sums.csv");
  out << "cap,kappa_1,kappa_2_5,kappa_3\n";
  for (std::size_t i = 0; i < diag.truncation_caps.size(); ++i) {
    out << diag.truncation_caps[i];
    for (double kappa : exponents)
      out << ',' << format_number(diag.partial_sums.at(kappa)[i]);
    out << '\n';
  }
}

void emit_kernel_profile(const std::filesystem::path& report_dir) {
  // Transect of the closed kernel along q(x) = x + 0.3 j against p = 1 +
  // 0.2 i; the profile peaks near the singular sphere crossings x ~ +-0.97.
  const Quat p = Quat{1.0} + 0.2 * Quat::unit_i();
  std::ofstream out(report_dir / "kernel_profile.csv");
  out << "x,re,i,j,k,abs\n";
  for (int step = -60; step <= 60; ++step) {
    const double x = 0.05 * step;
    const Quat q = Quat{x} + 0.3 * Quat::unit_j();
    const Quat value = kernel_closed(q, p);
    out << format_number(x) << ',' << format_number(value.w) << ','
        << format_number(value.x) << ',' << format_number(value.y) << ','
        << format_number(value.z) << ',' << format_number(norm(value))
        << '\n';
  }
}

}  // namespace

void apply_config_file(SuiteConfig& config,
                       const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("config: cannot open '" + path.string() + "'");
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const auto comment = raw.find('#');
    if (comment != std::string::npos) raw.erase(comment);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto equals = line.find('=');
    if (equals == std::string::npos)
      config_error(line_number, "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, equals));
    const std::string value = trim(line.substr(equals + 1));
    if (key.empty()) config_error(line_number, "empty key");
    if (value.empty()) config_error(line_number, "empty value for '" + key + "'");

    if (key == "suite") {
      if (!known_suite(value))
        config_error(line_number, "unknown suite '" + value + "'");
      config.suite = value;
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::exception&) {
        config_error(line_number, "expected an unsigned seed, got '" + value + "'");
      }
    } else if (key == "out") {
      config.output_dir = value;
    } else if (key == "timings") {
      config.timings = parse_bool(value, line_number);
    } else if (key == "quadrature.radial_order") {
      config.quadrature.radial_order = parse_int(value, line_number);
    } else if (key == "quadrature.angular_order") {
      config.quadrature.angular_order = parse_int(value, line_number);
    } else if (key == "quadrature.hemi_phi_order") {
      config.quadrature.hemi_phi_order = parse_int(value, line_number);
    } else if (key == "quadrature.hemi_psi_order") {
      config.quadrature.hemi_psi_order = parse_int(value, line_number);
    } else if (key == "quadrature.area_normalization") {
      config.quadrature.area_normalization = parse_double(value, line_number);
    } else if (key == "quadrature.singular_exclusion_radius") {
      config.quadrature.singular_exclusion_radius =
          parse_double(value, line_number);
    } else if (key == "truncation.max_m") {
      config.truncation.max_m = parse_int(value, line_number);
    } else if (key == "truncation.tail_tolerance") {
      config.truncation.tail_tolerance = parse_double(value, line_number);
    } else if (key.rfind("tolerance.", 0) == 0) {
      const std::string check_name = key.substr(10);
      if (!known_check(check_name))
        config_error(line_number, "unknown check '" + check_name +
                                      "' under tolerance.*");
      config.tolerance_overrides[check_name] = parse_double(value, line_number);
    } else {
      config_error(line_number, "unknown key '" + key + "'");
    }
  }
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  if (!known_suite(config.suite))
    throw std::invalid_argument("unknown suite '" + config.suite + "'");

  CheckContext context;
  context.quadrature = config.quadrature;
  context.truncation = config.truncation;
  context.seed = config.seed;

  std::vector<VerificationReport> reports;
  for (const Check& check : check_catalog()) {
    if (config.suite != "all" && check.suite != config.suite) continue;

    VerificationReport report;
    report.suite = check.suite;
    report.check_name = check.name;
    report.anchor = check.anchor;
    report.tolerance = check.tolerance;
    if (const auto it = config.tolerance_overrides.find(check.name);
        it != config.tolerance_overrides.end())
      report.tolerance = it->second;

    const auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    try {
      outcome = check.run(context);
    } catch (const std::exception&) {
      // A numeric failure is a failed check, never a crashed run.
      outcome.max_abs_err = std::numeric_limits<double>::infinity();
      outcome.max_rel_err = std::numeric_limits<double>::infinity();
    }
    const auto stop = std::chrono::steady_clock::now();

    report.max_abs_err = outcome.max_abs_err;
    report.max_rel_err = outcome.max_rel_err;
    double operative = 0.0;
    switch (check.gauge) {
      case Gauge::absolute: operative = outcome.max_abs_err; break;
      case Gauge::relative: operative = outcome.max_rel_err; break;
      case Gauge::combined:
        operative = std::max(outcome.max_abs_err, outcome.max_rel_err);
        break;
    }
    report.pass = std::isfinite(operative) && operative <= report.tolerance;
    report.runtime_ms =
        config.timings
            ? std::chrono::duration<double, std::milli>(stop - start).count()
            : 0.0;
    reports.push_back(report);
  }
  return reports;
}

void write_report_files(const std::vector<VerificationReport>& reports,
                        const SuiteConfig& config) {
  std::filesystem::create_directories(config.output_dir);

  std::ofstream jsonl(config.output_dir / "report.jsonl");
  if (!jsonl)
    throw std::runtime_error("cannot write " +
                             (config.output_dir / "report.jsonl").string());
  for (const VerificationReport& report : reports)
    jsonl << report_jsonl_line(report) << '\n';
  jsonl.close();

  std::ofstream csv(config.output_dir / "report.csv");
  csv << report_csv_header() << '\n';
  for (const VerificationReport& report : reports)
    csv << report_csv_row(report) << '\n';
  csv.close();

  if (config.suite == "spectrum" || config.suite == "all") {
    emit_plot_data(config.output_dir, "singular_values");
    emit_plot_data(config.output_dir, "schatten_sums");
    emit_plot_data(config.output_dir, "kernel_profile");
  }
}

void emit_plot_data(const std::filesystem::path& report_dir,
                    const std::string& kind) {
  require_reports(report_dir);
  if (kind == "singular_values")
    emit_singular_values(report_dir);
  else if (kind == "schatten_sums")
    emit_schatten_sums(report_dir);
  else if (kind == "kernel_profile")
    emit_kernel_profile(report_dir);
  else
    throw std::invalid_argument("emit_plot_data: unknown kind '" + kind + "'");
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& report : reports)
    if (!report.pass) return 1;
  return 0;
}

}  // namespace qct
