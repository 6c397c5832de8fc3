#include "expspec/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>

#include "expspec/algebra.hpp"
#include "expspec/errors.hpp"
#include "expspec/generalize.hpp"
#include "expspec/homotopy.hpp"
#include "expspec/spectrum.hpp"

namespace expspec {

namespace {

constexpr double kInverseTol = 1e-10;
constexpr double kEigenTol = 1e-12;
constexpr double kOnCircleTol = 1e-12;
constexpr std::size_t kMinFamilyMesh = 1000;

const char* const kCiteIdentity = "1 - 2ab = c, c = I - 2 z z^H / (1 + i z2)^2";
const char* const kCiteDiagonal = "1 - 2ba = diag(phi(z2), 1), phi(z2) = -((1 - i z2)/(1 + i z2))^2";
const char* const kCiteEigen = "ab(x) has eigenvalues 0 and (1 - z2^2)/(1 + i z2)^2";
const char* const kCiteInverse = "if 1 - ab has inverse u then 1 - ba has inverse 1 + b u a";
const char* const kCiteUnitary = "c(x) is unitary, so |det c(x)| = 1";
const char* const kCiteCircleC = "sigma(ab) and sigma(ba) are the circle C with centre 1/2 and radius 1/2";
const char* const kCite2ba = "sigma(1 - 2ba) = phi([-1, 1]) u {1} = T";
const char* const kCite2ab = "sigma(1 - 2ab) = 1 - 2 sigma(ab) = T";
const char* const kCiteCommute = "sigma(ab) \\ {0} = sigma(ba) \\ {0}";
const char* const kCiteOne = "sigma(1) = {1}";

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

const std::map<std::string, std::string>& evidence_citations() {
  static const std::map<std::string, std::string> m = {
      {"path_min_abs_det", "t -> diag(phi((1 - t) z2 + t), 1) stays invertible"},
      {"path_det_unit_deviation", "|phi| = 1 on [-1, 1], so the path is unitary"},
      {"endpoint_residual_t0", "the path starts at 1 - 2ba"},
      {"endpoint_residual_t1", "the path ends at the identity, phi(1) = 1"},
      {"equator_residual", "f coincides with Eh on the equator z2 = 0"},
      {"hemisphere_worst_violation",
       "f and Eh map the upper (lower) hemisphere of S^4 into the upper (lower) hemisphere of S^3"},
      {"antipodal_min_gap", "f(x) and Eh(x) are never antipodal points of S^3"},
      {"antipodal_certified_lower_bound",
       "f(x) and Eh(x) are never antipodal on all of S^4 (covering argument plus cap bound)"},
      {"projection_min_norm", "the second column of c(x) never vanishes"},
      {"det_c_unit_deviation", kCiteUnitary},
      {"straightline_unit_deviation", "normalized straight-line homotopy from f to Eh is defined"},
      {"eh_pole_approach", "Eh extends continuously to the poles by (0, +-i)"},
      {"hopf_linking_abs", "h is not null-homotopic: fibres of h link once"},
      {"hopf_linking_residual", "Gauss linking integral of two fibres of h is an integer"},
  };
  return m;
}

std::string evidence_citation(const std::string& name) {
  const auto& m = evidence_citations();
  const auto it = m.find(name);
  return it == m.end() ? name : it->second;
}

AlgebraElement element_for(const std::string& tag) {
  if (tag == "ab") return elements::ab();
  if (tag == "ba") return elements::ba();
  if (tag == "one-minus-2ab") return elements::one_minus_2ab();
  if (tag == "one-minus-2ba") return elements::one_minus_2ba();
  if (tag == "one") return AlgebraElement::one();
  throw ConfigError("unknown element '" + tag + "'");
}

std::optional<TargetSet> target_for(const std::string& tag) {
  if (tag == "ab" || tag == "ba") return TargetSet::circle_c();
  if (tag == "one-minus-2ab" || tag == "one-minus-2ba") return TargetSet::unit_circle();
  return std::nullopt;
}

const char* citation_for(const std::string& tag) {
  if (tag == "ab" || tag == "ba") return kCiteCircleC;
  if (tag == "one-minus-2ba") return kCite2ba;
  if (tag == "one-minus-2ab") return kCite2ab;
  return kCiteOne;
}

bool filters_zero(const std::string& tag) { return tag == "ab" || tag == "ba"; }

Report base_report(const RunConfig& config, const std::string& command) {
  Report r;
  r.command = command;
  r.config = config.to_json();
  return r;
}

void add_spectrum_records(Report& report, const std::string& tag, const SpectrumEstimate& raw,
                          const RunConfig& config) {
  SpectrumEstimate est = raw;
  if (filters_zero(tag)) est.cloud = drop_near_zero(raw.cloud);
  const std::string prefix = "spectrum " + tag + ": ";
  const auto target = target_for(tag);
  if (!target) {
    const bool is_one = est.cloud.size() == 1 && est.cloud[0] == Complex{1.0, 0.0};
    report.records.push_back(
        make_record(prefix + "cloud is {1}", citation_for(tag), is_one ? 1.0 : 0.0, Comparator::EQ, 1.0));
  } else {
    double off = 0.0;
    for (const Complex& z : est.cloud) off = std::max(off, target->distance(z));
    report.records.push_back(make_record(prefix + "max distance of cloud from " + target->name(),
                                         citation_for(tag), off, Comparator::LE, kOnCircleTol));
    const double h = est.cloud.empty() ? INFINITY : hausdorff_to_target(est, *target);
    report.records.push_back(make_record(prefix + "Hausdorff distance to " + target->name(),
                                         citation_for(tag), h, Comparator::LE,
                                         config.tol_hausdorff));
  }
  report.notes.push_back(prefix + "cloud size " + std::to_string(raw.cloud.size()) +
                         (filters_zero(tag) ? " (" + std::to_string(est.cloud.size()) + " nonzero)" : "") +
                         fmt(", mesh covering radius %.6g", raw.covering_radius) +
                         fmt(", local eigenvalue slope %.6g", raw.lipschitz));
}

void write_spectrum_files(const RunConfig& config, const std::string& tag,
                          const SpectrumEstimate& est) {
  if (!config.csv_path.empty()) {
    std::ofstream out(config.csv_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + config.csv_path);
    write_cloud_csv(out, est);
  }
  if (!config.svg_path.empty()) {
    std::ofstream out(config.svg_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + config.svg_path);
    write_cloud_svg(out, est, target_for(tag));
  }
}

void add_commutativity_record(Report& report, const SpectrumEstimate& ab, const SpectrumEstimate& ba,
                              const RunConfig& config) {
  report.records.push_back(make_record("spectrum: nonzero sigma(ab) vs nonzero sigma(ba)",
                                       kCiteCommute, nonzero_spectrum_distance(ab, ba),
                                       Comparator::LE, config.tol_hausdorff));
}

const std::vector<std::string> kDeductions = {
    "1/2 - ba = (1 - 2ba)/2 and 1/2 - ab = (1 - 2ab)/2, so 1/2 in eps(.) iff 1 - 2(.) is not in Exp(A)",
    "1 - 2ba = diag(phi(z2), 1) and t -> diag(phi((1 - t) z2 + t), 1) is a path of invertibles to 1; "
    "hence 1 - 2ba in Exp(A) and 1/2 not in eps(ba) (unconditional)",
    "1 - 2ab = c; if c were in Exp(A), projecting a path of invertibles onto the second column and "
    "normalizing would make f = pc/|pc| null-homotopic in C(S^4, S^3)",
    "f and Eh are never antipodal, so the normalized straight line is a homotopy f ~ Eh",
    "Eh restricted to the equator is h; the fibres of h link once, so h is not null-homotopic",
    "assumption (Freudenthal suspension theorem): Eh is not null-homotopic, hence neither is f",
    "therefore c = 1 - 2ab is not in Exp(A) and 1/2 in eps(ab) (modulo the assumption above)",
    "documented deduction, not machine-checked beyond the point 1/2: eps(ba) = C and eps(ab) = D",
};

}  // namespace

bool is_known_element(const std::string& tag) {
  return tag == "ab" || tag == "ba" || tag == "one-minus-2ab" || tag == "one-minus-2ba" ||
         tag == "one";
}

void RunConfig::validate() const {
  auto range = [](const char* name, int v, int lo, int hi) {
    if (v < lo || v > hi) {
      throw ConfigError(std::string(name) + " must be in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
  };
  range("--lat", lat, 3, 4097);
  range("--shell", shell, 8, 1024);
  range("--segments", segments, 64, 65536);
  range("--t-count", t_count, 2, 4097);
  range("--gen-lat", gen_lat, 3, 257);
  range("--gen-shell", gen_shell, 8, 64);
  auto positive = [](const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(name) + " must be positive");
  };
  positive("--tol-identity", tol_identity);
  positive("--tol-hausdorff", tol_hausdorff);
  if (!is_known_element(element)) throw ConfigError("unknown element '" + element + "'");
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["lat"] = lat;
  j["shell"] = shell;
  j["segments"] = segments;
  j["t_count"] = t_count;
  j["gen_lat"] = gen_lat;
  j["gen_shell"] = gen_shell;
  j["tol_identity"] = tol_identity;
  j["tol_hausdorff"] = tol_hausdorff;
  j["element"] = element;
  j["format"] = format == OutputFormat::JSON ? "json" : "csv-summary";
  if (sabotage != CertifyOptions::Sabotage::NONE) {
    j["sabotage"] = sabotage == CertifyOptions::Sabotage::FLIP_F ? "flip-f" : "fiber";
  }
  return j;
}

Report cmd_verify_identities(const RunConfig& config) {
  config.validate();
  Report report = base_report(config, "verify-identities");
  const SphereMesh4 mesh = mesh_s4(config.lat, config.shell);

  double identity = 0.0;
  double diagonal = 0.0;
  double eigen = 0.0;
  double unitary = 0.0;
  mesh.for_each([&](const SpherePoint4& x) {
    const Mat2 c = eval_c(x);
    identity = std::max(identity, op_norm(eval_one_minus_2ab(x) - c));
    diagonal = std::max(diagonal, op_norm(eval_one_minus_2ba(x) - Mat2::diag(phi(x.z2), 1.0)));
    unitary = std::max(unitary, std::abs(std::abs(c.det()) - 1.0));
    const auto [l0, l1] = eig2(mat_mul(eval_a(x), eval_b(x)));
    const Complex mu = product_eigenvalue(x.z2);
    const double direct = std::max(std::abs(l0), std::abs(l1 - mu));
    const double swapped = std::max(std::abs(l1), std::abs(l0 - mu));
    eigen = std::max(eigen, std::min(direct, swapped));
  });
  const InverseSweep inverse = inverse_identity_sweep(mesh);

  report.records.push_back(make_record("identity: max ||(1 - 2ab)(x) - c(x)||", kCiteIdentity,
                                       identity, Comparator::LE, config.tol_identity));
  report.records.push_back(make_record("identity: max ||(1 - 2ba)(x) - diag(phi(z2), 1)||",
                                       kCiteDiagonal, diagonal, Comparator::LE,
                                       config.tol_identity));
  report.records.push_back(make_record("identity: max eigenvalue error of ab(x)", kCiteEigen, eigen,
                                       Comparator::LE, kEigenTol));
  report.records.push_back(make_record("identity: max ||det c(x)| - 1|", kCiteUnitary, unitary,
                                       Comparator::LE, kEigenTol));
  report.records.push_back(make_record("identity: max inverse-identity residual over mesh x mu probes",
                                       kCiteInverse, inverse.max_residual, Comparator::LE,
                                       kInverseTol));
  report.notes.push_back("identity: mesh of " + std::to_string(mesh.size()) + " points");
  report.notes.push_back("identity: inverse probes evaluated " + std::to_string(inverse.evaluated) +
                         ", skipped as singular or ill-conditioned " +
                         std::to_string(inverse.skipped));
  return report;
}

Report cmd_spectrum(const RunConfig& config) {
  config.validate();
  Report report = base_report(config, "spectrum");
  const SphereMesh4 mesh = mesh_s4(config.lat, config.shell);
  const SpectrumEstimate est = sample_spectrum(element_for(config.element), mesh);
  add_spectrum_records(report, config.element, est, config);
  if (config.element == "ab" || config.element == "ba") {
    const std::string other = config.element == "ab" ? "ba" : "ab";
    const SpectrumEstimate est_other = sample_spectrum(element_for(other), mesh);
    if (config.element == "ab") {
      add_commutativity_record(report, est, est_other, config);
    } else {
      add_commutativity_record(report, est_other, est, config);
    }
  }
  write_spectrum_files(config, config.element, est);
  return report;
}

Report cmd_certify(const RunConfig& config) {
  config.validate();
  Report report = base_report(config, "certify");
  const SphereMesh4 mesh = mesh_s4(config.lat, config.shell);

  CertifyOptions options;
  options.t_count = config.t_count;
  options.segments = config.segments;
  options.sabotage = config.sabotage;
  const CertificateEvidence ev = collect_evidence(mesh, options);

  for (const EvidenceBound& b : ev.one_minus_2ba) {
    report.records.push_back(make_record("certify 1-2ba: " + b.name, evidence_citation(b.name),
                                         b.value, b.cmp, b.threshold));
  }
  for (const EvidenceBound& b : ev.one_minus_2ab) {
    report.records.push_back(make_record("certify 1-2ab: " + b.name, evidence_citation(b.name),
                                         b.value, b.cmp, b.threshold));
  }

  bool certified = false;
  try {
    const CertificatePair pair = build_certificates(ev);
    report.certificates.push_back(to_json(pair.one_minus_2ba));
    report.certificates.push_back(to_json(pair.one_minus_2ab));
    certified = true;
  } catch (const CertificateFailure& e) {
    report.notes.push_back(std::string("certify: no certificate issued, ") + e.what());
  }
  report.records.push_back(make_record(
      "headline: 1/2 in eps(ab) and 1/2 not in eps(ba)",
      "1/2 in eps(ab) [modulo the Freudenthal suspension theorem] and 1/2 not in eps(ba) "
      "[unconditional]",
      certified ? 1.0 : 0.0, Comparator::EQ, 1.0));
  report.deductions = kDeductions;

  if (ev.linking_failed) report.notes.push_back("certify: linking failed, " + ev.linking_error);
  report.notes.push_back(fmt("certify: antipodal min gap %.17g", ev.gap.min_gap));
  report.notes.push_back(fmt("certify: antipodal band bound %.17g", ev.gap.band_bound) +
                         fmt(", cap bound %.17g", ev.gap.cap_bound) +
                         fmt(", cap sample min %.17g", ev.gap.cap_sample_min));
  report.notes.push_back(fmt("certify: gradient estimate %.6g", ev.gap.lipschitz) +
                         fmt(", covering radius %.6g (numerical, not a rigorous Lipschitz bound)",
                             ev.gap.covering_radius));
  report.notes.push_back(fmt("certify: Gauss linking raw %.17g", ev.linking.raw) + " at " +
                         std::to_string(config.segments) + " segments");
  return report;
}

Report cmd_generalize(const RunConfig& config) {
  config.validate();
  Report report = base_report(config, "generalize");
  const char* cite = "a = z (x) e1 / (1 + i zn), b = e1 (x) z / (1 + i zn) on S^{2n}";
  for (int n : {2, 3}) {
    const MeshS2n mesh = mesh_s2n(n, config.gen_lat, config.gen_shell);
    const FamilyCheck check = family_identity_check(n, mesh);
    const double tol = n == 2 ? config.tol_identity : 10.0 * config.tol_identity;
    const std::string prefix = "generalize n=" + std::to_string(n) + ": ";
    report.records.push_back(
        make_record(prefix + "max identity residual", cite, check.max_residual, Comparator::LE, tol));
    report.records.push_back(make_record(prefix + "charpoly(ab) vs charpoly(ba)", kCiteCommute,
                                         check.ab_ba_charpoly, Comparator::LE, kEigenTol));
    report.records.push_back(make_record(prefix + "second singular value of a, b", "a and b have rank one",
                                         check.max_rank_bound, Comparator::LE, kEigenTol));
    if (n == 3) {
      report.records.push_back(make_record(prefix + "mesh points", "S^6 mesh size",
                                           static_cast<double>(check.points), Comparator::GE,
                                           static_cast<double>(kMinFamilyMesh)));
    }
    report.notes.push_back(prefix + fmt("ba diagonal %.3g", check.ba_diagonal) +
                           fmt(", ab closed form %.3g", check.ab_closed_form) +
                           fmt(", ab eigenvalues %.3g", check.ab_eigenvalues));
  }
  const bool same = matches_algebra_bitwise(mesh_s4(config.gen_lat, config.gen_shell));
  report.records.push_back(make_record("generalize n=2: bit-identical to a, b on S^4",
                                       "the n = 2 family is the S^4 construction", same ? 1.0 : 0.0,
                                       Comparator::EQ, 1.0));
  report.notes.push_back(
      "generalize: 1/2 in eps(ab) and 1/2 not in eps(ba) for n >= 3 is asserted, not machine-checked");
  return report;
}

Report cmd_report_all(const RunConfig& config) {
  config.validate();
  Report report = base_report(config, "report-all");
  report.append(cmd_verify_identities(config));

  const SphereMesh4 mesh = mesh_s4(config.lat, config.shell);
  std::map<std::string, SpectrumEstimate> spectra;
  for (const char* tag : {"ab", "ba", "one-minus-2ab", "one-minus-2ba"}) {
    spectra.emplace(tag, sample_spectrum(element_for(tag), mesh));
    add_spectrum_records(report, tag, spectra.at(tag), config);
  }
  add_commutativity_record(report, spectra.at("ab"), spectra.at("ba"), config);

  report.append(cmd_certify(config));
  report.append(cmd_generalize(config));
  return report;
}

std::string render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::CSV_SUMMARY) return report.csv_summary();
  return report.to_json().dump(2) + "\n";
}

}  // namespace expspec
