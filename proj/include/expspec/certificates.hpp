#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "expspec/homotopy.hpp"
#include "expspec/hopf_invariant.hpp"
#include "expspec/sphere.hpp"

namespace expspec {

enum class Comparator { LE, GE, GT, EQ };

const char* to_string(Comparator cmp);

/// Named scalar with the bound it has to satisfy. NaN never passes.
struct EvidenceBound {
  std::string name;
  double value = 0.0;
  Comparator cmp = Comparator::LE;
  double threshold = 0.0;

  bool pass() const;
};

enum class Subject { ONE_MINUS_2AB, ONE_MINUS_2BA };
enum class Verdict { NULL_HOMOTOPIC, OBSTRUCTED_MODULO_SUSPENSION };

const char* to_string(Subject subject);
const char* to_string(Verdict verdict);

/// NULL_HOMOTOPIC certificates carry no assumptions; OBSTRUCTED ones carry
/// exactly the Freudenthal suspension step.
struct HomotopyCertificate {
  Subject subject = Subject::ONE_MINUS_2BA;
  Verdict verdict = Verdict::NULL_HOMOTOPIC;
  std::vector<EvidenceBound> evidence;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
};

inline const std::string kFreudenthalAssumption =
    "Freudenthal suspension theorem: the suspension Eh of the Hopf map is not "
    "null-homotopic in C(S^4, S^3)";

struct CertifyOptions {
  enum class Sabotage { NONE, FLIP_F, FIBER };

  int t_count = 33;
  int segments = 256;
  double cap_delta = 0.05;
  double min_gap_floor = 0.1;
  double linking_residual_max = 0.2;
  Sabotage sabotage = Sabotage::NONE;
};

/// Raw numbers behind both certificates.
struct CertificateEvidence {
  std::vector<EvidenceBound> one_minus_2ba;
  std::vector<EvidenceBound> one_minus_2ab;
  NullHomotopySweep path;
  GapResult gap;
  LinkingResult linking;
  double pole_approach = 0.0;
  bool linking_failed = false;
  std::string linking_error;
};

CertificateEvidence collect_evidence(const SphereMesh4& mesh, const CertifyOptions& options = {});

struct CertificatePair {
  HomotopyCertificate one_minus_2ab;
  HomotopyCertificate one_minus_2ba;
};

/// Throws CertificateFailure naming the first failing bound (1 - 2ba bounds first).
CertificatePair build_certificates(const CertificateEvidence& evidence);
CertificatePair build_certificates(const SphereMesh4& mesh, const CertifyOptions& options = {});

/// {subject, verdict, evidence: {name: value}, assumptions: [...], notes: [...]}
nlohmann::ordered_json to_json(const HomotopyCertificate& cert);

}  // namespace expspec
