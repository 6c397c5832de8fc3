#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expspec/linalg2.hpp"
#include "expspec/sphere.hpp"

namespace expspec {

/// Point of S^2 as (p1, p2) in C x R with |p1|^2 + p2^2 = 1.
struct S2Point {
  Complex p1{};
  double p2 = 0.0;
};

/// Hopf map h(w0, w1) = (-2 w0 conj(w1), |w0|^2 - |w1|^2).
S2Point hopf(const SpherePoint3& w);

/// Suspension of the Hopf map,
///   Eh(z) = (-2 z0 conj(z1) / r, (|z0|^2 - |z1|^2) / r + i z2),  r = sqrt(1 - z2^2).
/// The formula is 0/0 at the poles; there Eh(0, 0, +-1) = (0, +-i), the
/// continuous extension (|first| and the real part of the second coordinate
/// are both bounded by r).
SpherePoint3 suspension_eh(const SpherePoint4& x);

/// Second column of c(x).
std::pair<Complex, Complex> projected_column(const SpherePoint4& x);

inline constexpr double kMinProjectionNorm = 1e-13;

/// f = pc / |pc|. Throws DegenerateProjection if |pc| <= kMinProjectionNorm.
SpherePoint3 f_map(const SpherePoint4& x);

/// Tagged map S^4 -> S^3. Custom maps exist for negative controls.
class MapS4toS3 {
 public:
  enum class Tag { F_MAP, EH_MAP, CUSTOM };
  using Fn = std::function<SpherePoint3(const SpherePoint4&)>;

  static MapS4toS3 f();
  static MapS4toS3 eh();
  static MapS4toS3 custom(std::string name, Fn fn);

  Tag tag() const { return tag_; }
  const std::string& name() const { return name_; }
  SpherePoint3 operator()(const SpherePoint4& x) const { return fn_(x); }

 private:
  MapS4toS3(Tag tag, std::string name, Fn fn)
      : tag_(tag), name_(std::move(name)), fn_(std::move(fn)) {}

  Tag tag_;
  std::string name_;
  Fn fn_;
};

struct GapOptions {
  /// Polar caps are |z2| > 1 - cap_delta.
  double cap_delta = 0.05;
  /// Closed-form lower bound of |f + g| on the caps. When empty the caps are
  /// handled by the same covering argument as the band.
  std::optional<double> analytic_cap_bound;
  double fd_step = 1e-6;
};

struct GapResult {
  double min_gap = 0.0;                ///< min over mesh of |f(x) + g(x)|
  double certified_lower_bound = 0.0;  ///< min(band_bound, cap_bound)
  double band_bound = 0.0;
  double cap_bound = 0.0;              ///< +inf when the caps are part of the band
  double cap_sample_min = 0.0;         ///< dense cap sampling (NaN when not run)
  double lipschitz = 0.0;              ///< largest local |grad f| + |grad g| estimate used
  double covering_radius = 0.0;        ///< largest cell covering radius used
};

/// Distance of f and g from being antipodal on the mesh, with a lower bound
/// over all of S^4.
///
/// The band bound is min over latitude cells of
///   min(row gap) - (local gradient estimate) * (cell covering radius),
/// where gradients come from central differences in an orthonormal tangent
/// frame at every mesh point. The gradient estimate is numerical, not a
/// rigorous Lipschitz constant.
GapResult antipodal_gap(const SphereMesh4& mesh, const MapS4toS3& f, const MapS4toS3& g,
                        const GapOptions& options);

/// f against Eh. On the caps |f + Eh| >= |Im f2 + Im Eh2| >= |z2| >= 1 - cap_delta,
/// because Im f2 has the sign of z2 and Im Eh2 = z2. Dense cap sampling
/// double-checks the bound.
GapResult antipodal_gap(const SphereMesh4& mesh, double cap_delta = 0.05);

/// ((1 - t) f + t g) / |(1 - t) f + t g|. Throws DegenerateNormalization for a zero vector.
SpherePoint3 straightline_homotopy(const SpherePoint4& x, double t, const MapS4toS3& f,
                                   const MapS4toS3& g);
SpherePoint3 straightline_homotopy(const SpherePoint4& x, double t);

/// Equispaced t values 0, 1/(n-1), ..., 1 (n >= 2).
std::vector<double> t_grid(int count);

/// max | |H(x, t)| - 1 | over mesh x t_grid; +inf if any normalization degenerates.
double straightline_unit_deviation(const SphereMesh4& mesh, int t_count, const MapS4toS3& f,
                                   const MapS4toS3& g);

/// diag(phi((1 - t) z2 + t), 1): joins (1 - 2ba)(x) at t = 0 to I at t = 1.
Mat2 null_homotopy_ba(const SpherePoint4& x, double t);

struct NullHomotopySweep {
  double min_abs_det = 0.0;
  double max_det_deviation = 0.0;  ///< max | |det H| - 1 |
  double start_residual = 0.0;     ///< max ||H(x, 0) - (1 - 2ba)(x)||
  double end_residual = 0.0;       ///< max ||H(x, 1) - I||
};

NullHomotopySweep null_homotopy_sweep(const SphereMesh4& mesh, int t_count);

/// min over points with z2 != 0 and |z2| != 1 of sign(z2) * Im(second coordinate of map(x)).
double hemisphere_preservation(const SphereMesh4& mesh, const MapS4toS3& map);
/// The worse of f and Eh.
double hemisphere_preservation(const SphereMesh4& mesh);

/// max over equator points of |f(x) - g(x)|.
double equator_residual(std::span<const SpherePoint4> equator, const MapS4toS3& f,
                        const MapS4toS3& g);

struct ProjectionStats {
  double min_norm = 0.0;             ///< min |pc(x)|
  double max_det_c_deviation = 0.0;  ///< max | |det c(x)| - 1 |
  double min_abs_det_c = 0.0;
};

ProjectionStats projection_stats(const SphereMesh4& mesh);

/// max over the shell at z2 = +-(1 - epsilon) of |Eh(x) - (0, +-i)|.
double eh_pole_approach(const ShellGrid& shell, double epsilon);

}  // namespace expspec
