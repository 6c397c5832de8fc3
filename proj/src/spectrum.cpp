#include "expspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "expspec/errors.hpp"

namespace expspec {

namespace {

using EigenPair = std::pair<Complex, Complex>;

struct CloudKey {
  std::int64_t re;
  std::int64_t im;
  bool operator==(const CloudKey&) const = default;
};

struct CloudKeyHash {
  std::size_t operator()(const CloudKey& k) const noexcept {
    const auto h = static_cast<std::uint64_t>(k.re) * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(k.im) + (h << 6) + (h >> 2)));
  }
};

CloudKey key_of(Complex z) {
  return {std::llround(z.real() / kCloudGranularity), std::llround(z.imag() / kCloudGranularity)};
}

double pair_distance(const EigenPair& p, const EigenPair& q) {
  const double straight = std::max(std::abs(p.first - q.first), std::abs(p.second - q.second));
  const double crossed = std::max(std::abs(p.first - q.second), std::abs(p.second - q.first));
  return std::min(straight, crossed);
}

}  // namespace

TargetSet TargetSet::circle_c() { return {TargetKind::CIRCLE_C, {0.5, 0.0}, 0.5}; }

TargetSet TargetSet::disk_d() { return {TargetKind::DISK_D, {0.5, 0.0}, 0.5}; }

TargetSet TargetSet::unit_circle() { return {TargetKind::UNIT_CIRCLE_T, {0.0, 0.0}, 1.0}; }

std::string TargetSet::name() const {
  switch (kind) {
    case TargetKind::CIRCLE_C:
      return "circle C (centre 1/2, radius 1/2)";
    case TargetKind::DISK_D:
      return "disk D (centre 1/2, radius 1/2)";
    case TargetKind::UNIT_CIRCLE_T:
      return "unit circle T";
  }
  return {};
}

double TargetSet::distance(Complex z) const {
  const double r = std::abs(z - centre);
  if (is_disk()) return std::max(r - radius, 0.0);
  return std::abs(r - radius);
}

std::vector<Complex> TargetSet::samples(std::size_t n) const {
  std::vector<Complex> out;
  if (n == 0) return out;
  const double two_pi = 2.0 * std::numbers::pi;
  if (!is_disk()) {
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back(centre + std::polar(radius, two_pi * static_cast<double>(k) / n));
    }
    return out;
  }
  const auto rings = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n)))));
  const std::size_t angles = std::max<std::size_t>(1, n / rings);
  out.reserve(rings * angles);
  for (std::size_t i = 0; i < rings; ++i) {
    const double r = radius * static_cast<double>(i) / static_cast<double>(rings - 1);
    for (std::size_t k = 0; k < angles; ++k) {
      out.push_back(centre + std::polar(r, two_pi * static_cast<double>(k) / angles));
    }
  }
  return out;
}

SpectrumEstimate sample_spectrum(const AlgebraElement& element, const SphereMesh4& mesh) {
  SpectrumEstimate est;
  est.element = element.name();
  est.lat_count = mesh.lat_count();
  est.shell_count = mesh.shell_count();
  est.mesh_size = mesh.size();
  est.covering_radius = mesh.covering_radius();

  std::unordered_map<CloudKey, Complex, CloudKeyHash> seen;
  auto add = [&](Complex z) { seen.try_emplace(key_of(z), z); };

  std::vector<EigenPair> previous_row;
  std::vector<SpherePoint4> previous_points;
  std::vector<EigenPair> current_row;
  std::vector<SpherePoint4> current_points;
  double slope = 0.0;
  auto note_slope = [&](const EigenPair& p, const SpherePoint4& x, const EigenPair& q,
                        const SpherePoint4& y) {
    const double d = distance(x, y);
    if (d > 0.0) slope = std::max(slope, pair_distance(p, q) / d);
  };

  for (std::size_t r = 0; r < mesh.row_count(); ++r) {
    const std::size_t n = mesh.row_size(r);
    current_row.resize(n);
    current_points.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const SpherePoint4 x = mesh.point(r, k);
      const EigenPair eig = eig2(element(x));
      add(eig.first);
      add(eig.second);
      current_row[k] = eig;
      current_points[k] = x;
      if (k > 0) note_slope(eig, x, current_row[k - 1], current_points[k - 1]);
      if (!previous_row.empty()) {
        const std::size_t j = previous_row.size() == 1 ? 0 : std::min(k, previous_row.size() - 1);
        note_slope(eig, x, previous_row[j], previous_points[j]);
      }
    }
    // the south pole is compared against every point of the last shell row
    if (n == 1 && previous_row.size() > 1) {
      for (std::size_t j = 0; j < previous_row.size(); ++j) {
        note_slope(current_row[0], current_points[0], previous_row[j], previous_points[j]);
      }
    }
    std::swap(previous_row, current_row);
    std::swap(previous_points, current_points);
  }

  est.cloud.reserve(seen.size());
  for (const auto& [key, value] : seen) est.cloud.push_back(value);
  std::sort(est.cloud.begin(), est.cloud.end(), lex_less);
  est.lipschitz = slope;
  return est;
}

double directed_hausdorff(std::span<const Complex> from, std::span<const Complex> to) {
  if (from.empty()) return 0.0;
  if (to.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& q : to) best = std::min(best, std::abs(p - q));
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff(std::span<const Complex> x, std::span<const Complex> y) {
  return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

double hausdorff_to_target(const SpectrumEstimate& est, const TargetSet& target,
                           std::size_t target_samples) {
  if (target_samples == 0) throw DomainError("hausdorff_to_target: no target samples");
  if (est.cloud.empty()) throw DomainError("hausdorff_to_target: empty cloud");
  double cloud_to_target = 0.0;
  for (const Complex& z : est.cloud) cloud_to_target = std::max(cloud_to_target, target.distance(z));
  const std::vector<Complex> samples = target.samples(target_samples);
  return std::max(cloud_to_target, directed_hausdorff(samples, est.cloud));
}

std::vector<Complex> drop_near_zero(std::span<const Complex> cloud, double threshold) {
  std::vector<Complex> out;
  for (const Complex& z : cloud) {
    if (std::abs(z) >= threshold) out.push_back(z);
  }
  return out;
}

double nonzero_spectrum_distance(const SpectrumEstimate& x, const SpectrumEstimate& y) {
  const std::vector<Complex> fx = drop_near_zero(x.cloud);
  const std::vector<Complex> fy = drop_near_zero(y.cloud);
  if (fx.empty() && fy.empty()) return 0.0;
  return hausdorff(fx, fy);
}

CommutativityResult commutativity_check(const SphereMesh4& mesh) {
  const SpectrumEstimate ab = sample_spectrum(elements::ab(), mesh);
  const SpectrumEstimate ba = sample_spectrum(elements::ba(), mesh);
  const InverseSweep sweep = inverse_identity_sweep(mesh);

  CommutativityResult result;
  result.hausdorff = nonzero_spectrum_distance(ab, ba);
  result.inverse_residual = sweep.max_residual;
  result.probes_evaluated = sweep.evaluated;
  result.probes_skipped = sweep.skipped;
  result.covering_radius = mesh.covering_radius();
  result.lipschitz = std::max(ab.lipschitz, ba.lipschitz);
  result.bound = 2.0 * result.covering_radius * result.lipschitz;
  return result;
}

void write_cloud_csv(std::ostream& out, const SpectrumEstimate& est) {
  out << "re,im\n";
  char buf[96];
  for (const Complex& z : est.cloud) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z.real(), z.imag());
    out << buf;
  }
}

void write_cloud_svg(std::ostream& out, const SpectrumEstimate& est,
                     const std::optional<TargetSet>& target) {
  const Complex centre = target ? target->centre : Complex{};
  const double half = target ? 1.5 * target->radius : 1.5;
  auto to_x = [&](double re) { return (re - (centre.real() - half)) / (2.0 * half); };
  auto to_y = [&](double im) { return 1.0 - (im - (centre.imag() - half)) / (2.0 * half); };
  char buf[256];

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"512\" "
         "height=\"512\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
  if (target) {
    const char* fill = target->is_disk() ? "#e8e8e8" : "none";
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"%s\" stroke=\"#888888\" "
                  "stroke-width=\"0.003\"/>\n",
                  to_x(centre.real()), to_y(centre.imag()), target->radius / (2.0 * half), fill);
    out << buf;
  }
  for (const Complex& z : est.cloud) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"0.004\" fill=\"#1f4e9c\"/>\n",
                  to_x(z.real()), to_y(z.imag()));
    out << buf;
  }
  out << "</svg>\n";
}

}  // namespace expspec
