#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expspec/algebra.hpp"
#include "expspec/sphere.hpp"

namespace expspec {

/// Union of pointwise eigenvalues of an element over a finite mesh.
///
/// This approximates sigma(f) from below. `covering_radius` and `lipschitz`
/// (largest local eigenvalue slope seen between neighbouring mesh points)
/// bound how far the true spectrum can sit from the cloud.
struct SpectrumEstimate {
  std::string element;
  std::vector<Complex> cloud;  ///< deduplicated at kCloudGranularity, sorted by (re, im)
  int lat_count = 0;
  int shell_count = 0;
  std::size_t mesh_size = 0;
  double covering_radius = 0.0;
  double lipschitz = 0.0;
};

inline constexpr double kCloudGranularity = 1e-12;
inline constexpr double kZeroThreshold = 1e-10;
inline constexpr std::size_t kTargetSamples = 4096;

enum class TargetKind { CIRCLE_C, DISK_D, UNIT_CIRCLE_T };

struct TargetSet {
  TargetKind kind = TargetKind::CIRCLE_C;
  Complex centre{};
  double radius = 1.0;

  /// Circle with centre 1/2 and radius 1/2.
  static TargetSet circle_c();
  /// Closed disk with centre 1/2 and radius 1/2.
  static TargetSet disk_d();
  static TargetSet unit_circle();

  bool is_disk() const { return kind == TargetKind::DISK_D; }
  std::string name() const;
  /// Exact Euclidean distance from z to the set.
  double distance(Complex z) const;
  /// Circles: n equispaced boundary points starting at angle 0.
  /// Disk: a polar grid of round(sqrt(n)) radii (centre to rim) times n / rings angles.
  std::vector<Complex> samples(std::size_t n) const;
};

SpectrumEstimate sample_spectrum(const AlgebraElement& element, const SphereMesh4& mesh);

/// max(sup_cloud dist(., target), sup_target-samples dist(., cloud)).
/// DomainError when the cloud is empty or no target samples are requested.
double hausdorff_to_target(const SpectrumEstimate& est, const TargetSet& target,
                           std::size_t target_samples = kTargetSamples);

double directed_hausdorff(std::span<const Complex> from, std::span<const Complex> to);
double hausdorff(std::span<const Complex> x, std::span<const Complex> y);

std::vector<Complex> drop_near_zero(std::span<const Complex> cloud,
                                    double threshold = kZeroThreshold);

/// Symmetric Hausdorff distance of the two clouds with values |z| < kZeroThreshold removed.
/// Zero when both filtered clouds are empty.
double nonzero_spectrum_distance(const SpectrumEstimate& x, const SpectrumEstimate& y);

struct CommutativityResult {
  double hausdorff = 0.0;          ///< sigma(ab)\{0} vs sigma(ba)\{0}
  double inverse_residual = 0.0;   ///< worst inverse-identity residual over mesh x probes
  std::size_t probes_evaluated = 0;
  std::size_t probes_skipped = 0;
  double covering_radius = 0.0;
  double lipschitz = 0.0;
  double bound = 0.0;              ///< 2 * covering_radius * lipschitz
};

CommutativityResult commutativity_check(const SphereMesh4& mesh);

/// Two columns re,im with 17 significant digits.
void write_cloud_csv(std::ostream& out, const SpectrumEstimate& est);

/// Static SVG scatter on a unit-square viewBox. The data window is the square
/// of half-width 1.5 r centred at the target centre (centre 0, half-width 1.5
/// without a target); a value z maps to
///   X = (re z - (cx - w)) / (2w),  Y = 1 - (im z - (cy - w)) / (2w).
void write_cloud_svg(std::ostream& out, const SpectrumEstimate& est,
                     const std::optional<TargetSet>& target);

}  // namespace expspec
