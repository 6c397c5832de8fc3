#include "expspec/homotopy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "expspec/algebra.hpp"
#include "expspec/errors.hpp"

namespace expspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec5 = std::array<double, 5>;

Vec5 to_vec(const SpherePoint4& x) {
  return {x.z0.real(), x.z0.imag(), x.z1.real(), x.z1.imag(), x.z2};
}

SpherePoint4 from_vec(const Vec5& v) {
  double n2 = 0.0;
  for (double c : v) n2 += c * c;
  const double n = std::sqrt(n2);
  return {{v[0] / n, v[1] / n}, {v[2] / n, v[3] / n}, v[4] / n};
}

double dot(const Vec5& a, const Vec5& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) s += a[i] * b[i];
  return s;
}

/// Orthonormal basis of the tangent space of S^4 at x (Gram-Schmidt with pivoting).
std::array<Vec5, 4> tangent_frame(const Vec5& x) {
  std::array<Vec5, 5> candidates{};
  for (std::size_t i = 0; i < 5; ++i) {
    candidates[i] = {};
    candidates[i][i] = 1.0;
  }
  std::array<Vec5, 4> frame{};
  std::array<bool, 5> used{};
  std::vector<Vec5> basis{x};
  for (std::size_t k = 0; k < 4; ++k) {
    double best_norm = -1.0;
    std::size_t best = 0;
    Vec5 best_vec{};
    for (std::size_t i = 0; i < 5; ++i) {
      if (used[i]) continue;
      Vec5 v = candidates[i];
      for (const Vec5& b : basis) {
        const double c = dot(v, b);
        for (std::size_t j = 0; j < 5; ++j) v[j] -= c * b[j];
      }
      const double n = std::sqrt(dot(v, v));
      if (n > best_norm) {
        best_norm = n;
        best = i;
        best_vec = v;
      }
    }
    used[best] = true;
    for (double& c : best_vec) c /= best_norm;
    frame[k] = best_vec;
    basis.push_back(best_vec);
  }
  return frame;
}

/// Frobenius norm of the differential of `map` at x, by central differences.
double gradient_norm(const MapS4toS3& map, const Vec5& x, const std::array<Vec5, 4>& frame,
                     double h) {
  double sum = 0.0;
  for (const Vec5& t : frame) {
    Vec5 plus = x;
    Vec5 minus = x;
    for (std::size_t j = 0; j < 5; ++j) {
      plus[j] += h * t[j];
      minus[j] -= h * t[j];
    }
    const double d = distance(map(from_vec(plus)), map(from_vec(minus))) / (2.0 * h);
    sum += d * d;
  }
  return std::sqrt(sum);
}

double gap(const SpherePoint3& p, const SpherePoint3& q) { return (p + q).norm(); }

}  // namespace

S2Point hopf(const SpherePoint3& w) {
  return {-2.0 * w.w0 * std::conj(w.w1), std::norm(w.w0) - std::norm(w.w1)};
}

SpherePoint3 suspension_eh(const SpherePoint4& x) {
  const double r = std::sqrt((1.0 - x.z2) * (1.0 + x.z2));
  if (r == 0.0) return {0.0, Complex{0.0, x.z2 > 0.0 ? 1.0 : -1.0}};
  const Complex first = -2.0 * x.z0 * std::conj(x.z1) / r;
  const double second_re = (std::norm(x.z0) - std::norm(x.z1)) / r;
  return {first, Complex{second_re, x.z2}};
}

std::pair<Complex, Complex> projected_column(const SpherePoint4& x) {
  const Mat2 c = eval_c(x);
  return {c.m01, c.m11};
}

SpherePoint3 f_map(const SpherePoint4& x) {
  const auto [p0, p1] = projected_column(x);
  const double n = std::sqrt(std::norm(p0) + std::norm(p1));
  if (!(n > kMinProjectionNorm)) throw DegenerateProjection("f_map: |pc| vanished");
  return {p0 / n, p1 / n};
}

MapS4toS3 MapS4toS3::f() { return MapS4toS3(Tag::F_MAP, "f", &f_map); }

MapS4toS3 MapS4toS3::eh() { return MapS4toS3(Tag::EH_MAP, "Eh", &suspension_eh); }

MapS4toS3 MapS4toS3::custom(std::string name, Fn fn) {
  return MapS4toS3(Tag::CUSTOM, std::move(name), std::move(fn));
}

GapResult antipodal_gap(const SphereMesh4& mesh, const MapS4toS3& f, const MapS4toS3& g,
                        const GapOptions& options) {
  const std::size_t rows = mesh.row_count();
  const bool caps_analytic = options.analytic_cap_bound.has_value();
  const double band_edge = 1.0 - options.cap_delta;

  auto cell_in_band = [&](std::size_t r) {
    if (!caps_analytic) return true;
    return std::min(std::abs(mesh.row(r).z2), std::abs(mesh.row(r + 1).z2)) <= band_edge;
  };
  std::vector<bool> needs_gradient(rows, false);
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    if (cell_in_band(r)) needs_gradient[r] = needs_gradient[r + 1] = true;
  }

  GapResult result;
  result.min_gap = kInf;
  std::vector<double> row_gap(rows, kInf);
  std::vector<double> row_slope(rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < mesh.row_size(r); ++k) {
      const SpherePoint4 x = mesh.point(r, k);
      row_gap[r] = std::min(row_gap[r], gap(f(x), g(x)));
      if (needs_gradient[r]) {
        const Vec5 v = to_vec(x);
        const auto frame = tangent_frame(v);
        const double slope = gradient_norm(f, v, frame, options.fd_step) +
                             gradient_norm(g, v, frame, options.fd_step);
        row_slope[r] = std::max(row_slope[r], slope);
      }
    }
    result.min_gap = std::min(result.min_gap, row_gap[r]);
  }

  result.band_bound = kInf;
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    if (!cell_in_band(r)) continue;
    const double slope = std::max(row_slope[r], row_slope[r + 1]);
    const double rho = mesh.cell_covering_radius(r);
    result.lipschitz = std::max(result.lipschitz, slope);
    result.covering_radius = std::max(result.covering_radius, rho);
    result.band_bound =
        std::min(result.band_bound, std::min(row_gap[r], row_gap[r + 1]) - slope * rho);
  }

  result.cap_bound = kInf;
  result.cap_sample_min = std::numeric_limits<double>::quiet_NaN();
  if (caps_analytic) {
    // dense check of the caps: 33 latitudes per cap over a 32-shell
    const ShellGrid shell = hopf_shell(32);
    double sample_min = kInf;
    for (int sign : {1, -1}) {
      for (int j = 0; j <= 32; ++j) {
        const double z2 = sign * (band_edge + options.cap_delta * j / 32.0);
        const double radius = std::sqrt((1.0 - std::abs(z2)) * (1.0 + std::abs(z2)));
        if (radius == 0.0) {
          const SpherePoint4 pole{0.0, 0.0, z2};
          sample_min = std::min(sample_min, gap(f(pole), g(pole)));
          continue;
        }
        for (const SpherePoint3& w : shell.points) {
          const SpherePoint4 x{radius * w.w0, radius * w.w1, z2};
          sample_min = std::min(sample_min, gap(f(x), g(x)));
        }
      }
    }
    result.cap_sample_min = sample_min;
    result.cap_bound = std::min(*options.analytic_cap_bound, sample_min);
  }

  result.certified_lower_bound = std::min(result.band_bound, result.cap_bound);
  return result;
}

GapResult antipodal_gap(const SphereMesh4& mesh, double cap_delta) {
  GapOptions options;
  options.cap_delta = cap_delta;
  options.analytic_cap_bound = 1.0 - cap_delta;
  return antipodal_gap(mesh, MapS4toS3::f(), MapS4toS3::eh(), options);
}

SpherePoint3 straightline_homotopy(const SpherePoint4& x, double t, const MapS4toS3& f,
                                   const MapS4toS3& g) {
  const SpherePoint3 v = (1.0 - t) * f(x) + t * g(x);
  const double n = v.norm();
  if (!(n > 0.0)) throw DegenerateNormalization("straight-line homotopy passed through zero");
  return (1.0 / n) * v;
}

SpherePoint3 straightline_homotopy(const SpherePoint4& x, double t) {
  return straightline_homotopy(x, t, MapS4toS3::f(), MapS4toS3::eh());
}

std::vector<double> t_grid(int count) {
  if (count < 2) throw DomainError("t grid needs at least two values");
  std::vector<double> ts(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ts[static_cast<std::size_t>(i)] = static_cast<double>(i) / (count - 1);
  return ts;
}

double straightline_unit_deviation(const SphereMesh4& mesh, int t_count, const MapS4toS3& f,
                                   const MapS4toS3& g) {
  const std::vector<double> ts = t_grid(t_count);
  double worst = 0.0;
  mesh.for_each([&](const SpherePoint4& x) {
    const SpherePoint3 fx = f(x);
    const SpherePoint3 gx = g(x);
    for (double t : ts) {
      const SpherePoint3 v = (1.0 - t) * fx + t * gx;
      const double n = v.norm();
      if (!(n > 0.0)) {
        worst = kInf;
        continue;
      }
      worst = std::max(worst, std::abs(((1.0 / n) * v).norm() - 1.0));
    }
  });
  return worst;
}

Mat2 null_homotopy_ba(const SpherePoint4& x, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("null_homotopy_ba: t outside [0, 1]");
  return Mat2::diag(phi((1.0 - t) * x.z2 + t), 1.0);
}

NullHomotopySweep null_homotopy_sweep(const SphereMesh4& mesh, int t_count) {
  const std::vector<double> ts = t_grid(t_count);
  NullHomotopySweep sweep;
  sweep.min_abs_det = kInf;
  mesh.for_each([&](const SpherePoint4& x) {
    for (double t : ts) {
      const Mat2 h = null_homotopy_ba(x, t);
      const double d = std::abs(h.det());
      sweep.min_abs_det = std::min(sweep.min_abs_det, d);
      sweep.max_det_deviation = std::max(sweep.max_det_deviation, std::abs(d - 1.0));
    }
    sweep.start_residual =
        std::max(sweep.start_residual, op_norm(null_homotopy_ba(x, 0.0) - eval_one_minus_2ba(x)));
    sweep.end_residual =
        std::max(sweep.end_residual, op_norm(null_homotopy_ba(x, 1.0) - Mat2::identity()));
  });
  return sweep;
}

double hemisphere_preservation(const SphereMesh4& mesh, const MapS4toS3& map) {
  double worst = kInf;
  mesh.for_each([&](const SpherePoint4& x) {
    const int side = hemisphere_sign(x);
    if (side == 0 || std::abs(x.z2) == 1.0) return;
    worst = std::min(worst, side * map(x).w1.imag());
  });
  return worst;
}

double hemisphere_preservation(const SphereMesh4& mesh) {
  return std::min(hemisphere_preservation(mesh, MapS4toS3::f()),
                  hemisphere_preservation(mesh, MapS4toS3::eh()));
}

double equator_residual(std::span<const SpherePoint4> equator, const MapS4toS3& f,
                        const MapS4toS3& g) {
  double worst = 0.0;
  for (const SpherePoint4& x : equator) worst = std::max(worst, distance(f(x), g(x)));
  return worst;
}

ProjectionStats projection_stats(const SphereMesh4& mesh) {
  ProjectionStats stats;
  stats.min_norm = kInf;
  stats.min_abs_det_c = kInf;
  mesh.for_each([&](const SpherePoint4& x) {
    const Mat2 c = eval_c(x);
    stats.min_norm = std::min(stats.min_norm, std::sqrt(std::norm(c.m01) + std::norm(c.m11)));
    const double d = std::abs(c.det());
    stats.min_abs_det_c = std::min(stats.min_abs_det_c, d);
    stats.max_det_c_deviation = std::max(stats.max_det_c_deviation, std::abs(d - 1.0));
  });
  return stats;
}

double eh_pole_approach(const ShellGrid& shell, double epsilon) {
  double worst = 0.0;
  for (int sign : {1, -1}) {
    const double z2 = sign * (1.0 - epsilon);
    const double radius = std::sqrt((1.0 - std::abs(z2)) * (1.0 + std::abs(z2)));
    const SpherePoint3 limit{0.0, Complex{0.0, static_cast<double>(sign)}};
    for (const SpherePoint3& w : shell.points) {
      const SpherePoint4 x{radius * w.w0, radius * w.w1, z2};
      worst = std::max(worst, distance(suspension_eh(x), limit));
    }
  }
  return worst;
}

}  // namespace expspec
