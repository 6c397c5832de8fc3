#include "expspec/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "expspec/errors.hpp"

namespace expspec {

namespace {

constexpr double kEquatorTol = 1e-12;
constexpr double kHemisphereTol = -1e-13;
constexpr double kUnitTol = 1e-12;
constexpr double kPathTol = 1e-13;
constexpr double kPoleApproachTol = 1e-4;
constexpr double kPoleApproachEpsilon = 1e-10;

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

const char* to_string(Comparator cmp) {
  switch (cmp) {
    case Comparator::LE:
      return "<=";
    case Comparator::GE:
      return ">=";
    case Comparator::GT:
      return ">";
    case Comparator::EQ:
      return "==";
  }
  return "?";
}

bool EvidenceBound::pass() const {
  if (std::isnan(value)) return false;
  switch (cmp) {
    case Comparator::LE:
      return value <= threshold;
    case Comparator::GE:
      return value >= threshold;
    case Comparator::GT:
      return value > threshold;
    case Comparator::EQ:
      return value == threshold;
  }
  return false;
}

const char* to_string(Subject subject) {
  return subject == Subject::ONE_MINUS_2AB ? "ONE_MINUS_2AB" : "ONE_MINUS_2BA";
}

const char* to_string(Verdict verdict) {
  return verdict == Verdict::NULL_HOMOTOPIC ? "NULL_HOMOTOPIC" : "OBSTRUCTED_MODULO_SUSPENSION";
}

CertificateEvidence collect_evidence(const SphereMesh4& mesh, const CertifyOptions& options) {
  CertificateEvidence ev;

  ev.path = null_homotopy_sweep(mesh, options.t_count);
  ev.one_minus_2ba = {
      {"path_min_abs_det", ev.path.min_abs_det, Comparator::GT, 0.0},
      {"path_det_unit_deviation", ev.path.max_det_deviation, Comparator::LE, kPathTol},
      {"endpoint_residual_t0", ev.path.start_residual, Comparator::LE, kPathTol},
      {"endpoint_residual_t1", ev.path.end_residual, Comparator::EQ, 0.0},
  };

  const MapS4toS3 eh = MapS4toS3::eh();
  const MapS4toS3 f = options.sabotage == CertifyOptions::Sabotage::FLIP_F
                          ? MapS4toS3::custom("-f", [](const SpherePoint4& x) {
                              return -1.0 * f_map(x);
                            })
                          : MapS4toS3::f();

  const std::vector<SpherePoint4> equator_points = mesh.equator();
  const double equator = equator_residual(equator_points, f, eh);
  const double hemisphere =
      std::min(hemisphere_preservation(mesh, f), hemisphere_preservation(mesh, eh));

  GapOptions gap_options;
  gap_options.cap_delta = options.cap_delta;
  gap_options.analytic_cap_bound = 1.0 - options.cap_delta;
  ev.gap = antipodal_gap(mesh, f, eh, gap_options);

  const ProjectionStats projection = projection_stats(mesh);
  const double unit = straightline_unit_deviation(mesh, options.t_count, f, eh);
  ev.pole_approach = eh_pole_approach(mesh.shell(), kPoleApproachEpsilon);

  HopfInvariantOptions hopf_options;
  hopf_options.sabotage_second_fiber = options.sabotage == CertifyOptions::Sabotage::FIBER;
  double linking_abs = std::numeric_limits<double>::quiet_NaN();
  double linking_residual = std::numeric_limits<double>::quiet_NaN();
  try {
    ev.linking = hopf_invariant_of_h(options.segments, hopf_options);
    linking_abs = static_cast<double>(std::labs(ev.linking.rounded));
    linking_residual = ev.linking.residual;
  } catch (const Error& e) {
    ev.linking_failed = true;
    ev.linking_error = e.what();
  }

  ev.one_minus_2ab = {
      {"equator_residual", equator, Comparator::LE, kEquatorTol},
      {"hemisphere_worst_violation", hemisphere, Comparator::GE, kHemisphereTol},
      {"antipodal_min_gap", ev.gap.min_gap, Comparator::GT, options.min_gap_floor},
      {"antipodal_certified_lower_bound", ev.gap.certified_lower_bound, Comparator::GT, 0.0},
      {"projection_min_norm", projection.min_norm, Comparator::GT, kMinProjectionNorm},
      {"det_c_unit_deviation", projection.max_det_c_deviation, Comparator::LE, kUnitTol},
      {"straightline_unit_deviation", unit, Comparator::LE, kUnitTol},
      {"eh_pole_approach", ev.pole_approach, Comparator::LE, kPoleApproachTol},
      {"hopf_linking_abs", linking_abs, Comparator::EQ, 1.0},
      {"hopf_linking_residual", linking_residual, Comparator::LE, options.linking_residual_max},
  };
  return ev;
}

CertificatePair build_certificates(const CertificateEvidence& evidence) {
  for (const auto* list : {&evidence.one_minus_2ba, &evidence.one_minus_2ab}) {
    for (const EvidenceBound& bound : *list) {
      if (!bound.pass()) throw CertificateFailure(bound.name);
    }
  }
  CertificatePair pair;
  pair.one_minus_2ba.subject = Subject::ONE_MINUS_2BA;
  pair.one_minus_2ba.verdict = Verdict::NULL_HOMOTOPIC;
  pair.one_minus_2ba.evidence = evidence.one_minus_2ba;
  pair.one_minus_2ba.notes = {
      "explicit path t -> diag(phi((1-t) z2 + t), 1) from 1-2ba to 1 through invertibles"};

  pair.one_minus_2ab.subject = Subject::ONE_MINUS_2AB;
  pair.one_minus_2ab.verdict = Verdict::OBSTRUCTED_MODULO_SUSPENSION;
  pair.one_minus_2ab.evidence = evidence.one_minus_2ab;
  pair.one_minus_2ab.assumptions = {kFreudenthalAssumption};
  pair.one_minus_2ab.notes = {
      "Eh(0,0,+-1) := (0, +-i) by continuous extension; eh_pole_approach measures the formula "
      "at |z2| = 1 - 1e-10",
      "machine-checked: f = pc/|pc| is homotopic to Eh (never antipodal), Eh = h on the equator, "
      "h has Hopf invariant +-1"};
  return pair;
}

CertificatePair build_certificates(const SphereMesh4& mesh, const CertifyOptions& options) {
  return build_certificates(collect_evidence(mesh, options));
}

nlohmann::ordered_json to_json(const HomotopyCertificate& cert) {
  nlohmann::ordered_json j;
  j["subject"] = to_string(cert.subject);
  j["verdict"] = to_string(cert.verdict);
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  for (const EvidenceBound& e : cert.evidence) evidence[e.name] = number(e.value);
  j["evidence"] = evidence;
  j["assumptions"] = cert.assumptions;
  j["notes"] = cert.notes;
  return j;
}

}  // namespace expspec
