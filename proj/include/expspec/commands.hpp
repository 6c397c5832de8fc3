#pragma once

#include <string>

#include "expspec/certificates.hpp"
#include "expspec/report.hpp"

namespace expspec {

enum class OutputFormat { JSON, CSV_SUMMARY };

struct RunConfig {
  std::string subcommand;
  int lat = 65;
  int shell = 64;
  int segments = 256;
  int t_count = 33;
  int gen_lat = 9;
  int gen_shell = 8;
  double tol_identity = 1e-13;
  double tol_hausdorff = 0.05;
  /// ab, ba, one-minus-2ab, one-minus-2ba (and the unlisted "one").
  std::string element = "ba";
  std::string out;       ///< empty: stdout
  std::string csv_path;  ///< spectrum cloud CSV
  std::string svg_path;  ///< spectrum cloud SVG
  OutputFormat format = OutputFormat::JSON;
  CertifyOptions::Sabotage sabotage = CertifyOptions::Sabotage::NONE;

  /// Throws ConfigError on out-of-range values or an unknown element.
  void validate() const;
  /// Config echo for reports. Output paths are left out so that the same
  /// computation reports identically wherever it is written.
  nlohmann::ordered_json to_json() const;
};

bool is_known_element(const std::string& tag);

Report cmd_verify_identities(const RunConfig& config);
Report cmd_spectrum(const RunConfig& config);
Report cmd_certify(const RunConfig& config);
Report cmd_generalize(const RunConfig& config);
Report cmd_report_all(const RunConfig& config);

/// Renders the report in the configured format.
std::string render(const Report& report, OutputFormat format);

}  // namespace expspec
