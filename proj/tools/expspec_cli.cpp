#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "expspec/commands.hpp"
#include "expspec/errors.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

void add_common_options(CLI::App* sub, expspec::RunConfig& cfg) {
  sub->add_option("--lat", cfg.lat, "latitude rows of the S^4 mesh")->capture_default_str();
  sub->add_option("--shell", cfg.shell, "S^3 shell resolution")->capture_default_str();
  sub->add_option("--segments", cfg.segments, "segments per Hopf fibre")->capture_default_str();
  sub->add_option("--t-count", cfg.t_count, "homotopy parameter samples")->capture_default_str();
  sub->add_option("--gen-lat", cfg.gen_lat, "latitude rows for the S^{2n} family meshes")
      ->capture_default_str();
  sub->add_option("--gen-shell", cfg.gen_shell, "shell resolution for the S^{2n} family meshes")
      ->capture_default_str();
  sub->add_option("--tol-identity,--tol", cfg.tol_identity, "identity residual tolerance")
      ->capture_default_str();
  sub->add_option("--tol-hausdorff", cfg.tol_hausdorff, "Hausdorff distance tolerance")
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "report path (default: stdout)");
  sub->add_option("--format", cfg.format, "json or csv-summary")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, expspec::OutputFormat>{{"json", expspec::OutputFormat::JSON},
                                                       {"csv-summary", expspec::OutputFormat::CSV_SUMMARY}},
          CLI::ignore_case));
  // Negative-control hook for tests; not listed in --help.
  sub->add_option("--sabotage", cfg.sabotage)
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, expspec::CertifyOptions::Sabotage>{
              {"none", expspec::CertifyOptions::Sabotage::NONE},
              {"flip-f", expspec::CertifyOptions::Sabotage::FLIP_F},
              {"fiber", expspec::CertifyOptions::Sabotage::FIBER}}))
      ->group("");
}

void check_writable(const std::string& path) {
  if (path.empty()) return;
  std::ofstream probe(path, std::ios::binary | std::ios::app);
  if (!probe) throw expspec::ConfigError("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of a non-commutative exponential spectrum example"};
  app.require_subcommand(1);
  expspec::RunConfig cfg;

  auto* verify = app.add_subcommand("verify-identities", "pointwise algebraic identities");
  auto* spectrum = app.add_subcommand("spectrum", "sampled spectrum of one element");
  auto* certify = app.add_subcommand("certify", "homotopy certificates for 1-2ab and 1-2ba");
  auto* generalize = app.add_subcommand("generalize", "identity checks for the n = 2, 3 family");
  auto* report_all = app.add_subcommand("report-all", "every suite in one report");
  for (auto* sub : {verify, spectrum, certify, generalize, report_all}) add_common_options(sub, cfg);
  spectrum->add_option("--element", cfg.element, "ab, ba, one-minus-2ab or one-minus-2ba")
      ->capture_default_str();
  spectrum->add_option("--csv", cfg.csv_path, "write the eigenvalue cloud as CSV");
  spectrum->add_option("--svg", cfg.svg_path, "write the eigenvalue cloud as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.validate();
    check_writable(cfg.out);
    check_writable(cfg.csv_path);
    check_writable(cfg.svg_path);

    expspec::Report report;
    if (cfg.subcommand == "verify-identities") {
      report = expspec::cmd_verify_identities(cfg);
    } else if (cfg.subcommand == "spectrum") {
      report = expspec::cmd_spectrum(cfg);
    } else if (cfg.subcommand == "certify") {
      report = expspec::cmd_certify(cfg);
    } else if (cfg.subcommand == "generalize") {
      report = expspec::cmd_generalize(cfg);
    } else {
      report = expspec::cmd_report_all(cfg);
    }

    const std::string text = expspec::render(report, cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out, std::ios::binary | std::ios::trunc);
      out << text;
      if (!out) throw expspec::ConfigError("cannot write " + cfg.out);
    }
    return report.overall_pass() ? kExitPass : kExitFail;
  } catch (const expspec::ConfigError& e) {
    std::fprintf(stderr, "expspec: %s\n", e.what());
    return kExitConfig;
  } catch (const expspec::InvalidResolution& e) {
    std::fprintf(stderr, "expspec: %s\n", e.what());
    return kExitConfig;
  } catch (const expspec::Error& e) {
    std::fprintf(stderr, "expspec: %s\n", e.what());
    return kExitFail;
  }
}
