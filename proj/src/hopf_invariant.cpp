#include "expspec/hopf_invariant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <utility>

#include "expspec/errors.hpp"

namespace expspec {

namespace {

using Vec4 = std::array<double, 4>;

Vec4 to_vec(const SpherePoint3& w) { return {w.w0.real(), w.w0.imag(), w.w1.real(), w.w1.imag()}; }

double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double det3(const Vec4& a, const Vec4& b, const Vec4& c, int skip) {
  std::array<std::array<double, 3>, 3> m{};
  for (int col = 0, j = 0; col < 4; ++col) {
    if (col == skip) continue;
    m[0][j] = a[col];
    m[1][j] = b[col];
    m[2][j] = c[col];
    ++j;
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// det of the 4x4 matrix with rows a, b, c, d (Laplace along d).
double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  double s = 0.0;
  for (int col = 0; col < 4; ++col) {
    const double sign = ((3 + col) % 2 == 0) ? 1.0 : -1.0;
    s += sign * d[col] * det3(a, b, c, col);
  }
  return s;
}

/// Orthonormal basis of pole^perp, positively oriented together with pole.
std::array<Vec4, 3> complement_basis(const Vec4& pole) {
  std::array<Vec4, 3> basis{};
  std::array<bool, 4> used{};
  std::vector<Vec4> span{pole};
  for (std::size_t k = 0; k < 3; ++k) {
    double best_norm = -1.0;
    std::size_t best = 0;
    Vec4 best_vec{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (used[i]) continue;
      Vec4 v{};
      v[i] = 1.0;
      for (const Vec4& b : span) {
        const double c = dot4(v, b);
        for (std::size_t j = 0; j < 4; ++j) v[j] -= c * b[j];
      }
      const double n = std::sqrt(dot4(v, v));
      if (n > best_norm) {
        best_norm = n;
        best = i;
        best_vec = v;
      }
    }
    used[best] = true;
    for (double& c : best_vec) c /= best_norm;
    basis[k] = best_vec;
    span.push_back(best_vec);
  }
  if (det4(basis[0], basis[1], basis[2], pole) < 0.0) {
    for (double& c : basis[2]) c = -c;
  }
  return basis;
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

/// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

PolylineCurve3::PolylineCurve3(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < kMinPolylineVertices) {
    throw DomainError("polyline needs at least 16 vertices");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec3& next = vertices_[(i + 1) % vertices_.size()];
    if (norm(next - vertices_[i]) == 0.0) throw DomainError("polyline has repeated consecutive vertices");
  }
}

PolylineCurve3 PolylineCurve3::reversed() const {
  return PolylineCurve3(std::vector<Vec3>(vertices_.rbegin(), vertices_.rend()));
}

PolylineCurve3 PolylineCurve3::transformed(const Rotation3& rotation, const Vec3& translation) const {
  std::vector<Vec3> out;
  out.reserve(vertices_.size());
  for (const Vec3& v : vertices_) {
    const std::array<double, 3> in{v.x, v.y, v.z};
    std::array<double, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) r[i] += rotation[i][j] * in[j];
    }
    out.push_back(Vec3{r[0], r[1], r[2]} + translation);
  }
  return PolylineCurve3(std::move(out));
}

std::vector<SpherePoint3> hopf_fiber(const S2Point& p, int segments) {
  if (segments < static_cast<int>(kMinPolylineVertices)) {
    throw DomainError("hopf_fiber: need at least 16 segments");
  }
  if (!(std::abs(std::norm(p.p1) + p.p2 * p.p2 - 1.0) <= kSphereTol)) {
    throw DomainError("hopf_fiber: point is not on S^2");
  }
  // h(w) = p  <=>  |w0|^2 = (1 + p2)/2, |w1|^2 = (1 - p2)/2, -2 w0 conj(w1) = p1
  SpherePoint3 w;
  if (p.p2 >= 0.0) {
    const double w0 = std::sqrt(0.5 * (1.0 + p.p2));
    w = {w0, -std::conj(p.p1) / (2.0 * w0)};
  } else {
    const double w1 = std::sqrt(0.5 * (1.0 - p.p2));
    w = {-p.p1 / (2.0 * w1), w1};
  }
  const double n = w.norm();
  w = (1.0 / n) * w;

  std::vector<SpherePoint3> samples;
  samples.reserve(static_cast<std::size_t>(segments));
  for (int k = 0; k < segments; ++k) {
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * k / segments);
    samples.push_back({phase * w.w0, phase * w.w1});
  }
  return samples;
}

SpherePoint3 default_projection_pole() {
  const double s = std::sqrt(0.5);
  return {Complex{s, 0.0}, Complex{0.0, s}};
}

Vec3 stereographic(const SpherePoint3& w, const SpherePoint3& pole) {
  if (distance(w, pole) < 1e-6) throw NearPole("stereographic: point too close to the pole");
  const Vec4 x = to_vec(w);
  const Vec4 p = to_vec(pole);
  const auto basis = complement_basis(p);
  const double denom = 1.0 - dot4(x, p);
  return {dot4(x, basis[0]) / denom, dot4(x, basis[1]) / denom, dot4(x, basis[2]) / denom};
}

PolylineCurve3 project_curve(const std::vector<SpherePoint3>& samples, const SpherePoint3& pole) {
  std::vector<Vec3> out;
  out.reserve(samples.size());
  for (const SpherePoint3& w : samples) out.push_back(stereographic(w, pole));
  return PolylineCurve3(std::move(out));
}

double min_vertex_segment_distance(const PolylineCurve3& c1, const PolylineCurve3& c2) {
  double best = std::numeric_limits<double>::infinity();
  auto sweep = [&](const PolylineCurve3& points, const PolylineCurve3& segs) {
    const auto& s = segs.vertices();
    for (const Vec3& p : points.vertices()) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        best = std::min(best, point_segment_distance(p, s[j], s[(j + 1) % s.size()]));
      }
    }
  };
  sweep(c1, c2);
  sweep(c2, c1);
  return best;
}

LinkingResult gauss_linking(const PolylineCurve3& c1, const PolylineCurve3& c2) {
  if (min_vertex_segment_distance(c1, c2) < kMinCurveSeparation) {
    throw CurvesTooClose("gauss_linking: curves closer than 1e-3");
  }
  const auto& v1 = c1.vertices();
  const auto& v2 = c2.vertices();
  std::vector<Vec3> mid2(v2.size());
  std::vector<Vec3> d2(v2.size());
  for (std::size_t j = 0; j < v2.size(); ++j) {
    const Vec3& b = v2[(j + 1) % v2.size()];
    mid2[j] = 0.5 * (v2[j] + b);
    d2[j] = b - v2[j];
  }

  CompensatedSum total;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    const Vec3& a = v1[(i + 1) % v1.size()];
    const Vec3 mid1 = 0.5 * (v1[i] + a);
    const Vec3 d1 = a - v1[i];
    CompensatedSum row;
    for (std::size_t j = 0; j < v2.size(); ++j) {
      const Vec3 r = mid1 - mid2[j];
      const double len = norm(r);
      row.add(dot(r, cross(d1, d2[j])) / (len * len * len));
    }
    total.add(row.value());
  }

  LinkingResult result;
  result.raw = total.value() / (4.0 * std::numbers::pi);
  result.rounded = std::lround(result.raw);
  result.residual = std::abs(result.raw - static_cast<double>(result.rounded));
  return result;
}

std::array<PolylineCurve3, 2> hopf_fiber_curves(int segments, const HopfInvariantOptions& options) {
  const std::vector<SpherePoint3> first = hopf_fiber(options.first, segments);
  std::vector<SpherePoint3> second;
  if (options.sabotage_second_fiber) {
    const double beta = std::numbers::pi / 3.0;
    for (int k = 0; k < segments; ++k) {
      const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * k / segments);
      second.push_back({std::cos(beta) * phase, std::sin(beta)});
    }
  } else {
    second = hopf_fiber(options.second, segments);
  }

  for (const std::vector<SpherePoint3>* curve : std::array{&first, &std::as_const(second)}) {
    double closest = std::numeric_limits<double>::infinity();
    for (const SpherePoint3& w : *curve) closest = std::min(closest, distance(w, options.pole));
    if (closest < kMinPoleDistance) throw NearPole("projection pole too close to a fibre");
  }
  return {project_curve(first, options.pole), project_curve(second, options.pole)};
}

LinkingResult hopf_invariant_of_h(int segments, const HopfInvariantOptions& options) {
  if (segments < 64) throw DomainError("hopf_invariant_of_h: need at least 64 segments");
  const auto curves = hopf_fiber_curves(segments, options);
  return gauss_linking(curves[0], curves[1]);
}

void write_polyline_csv(std::ostream& out, const PolylineCurve3& curve) {
  out << "x,y,z\n";
  char buf[96];
  for (const Vec3& v : curve.vertices()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", v.x, v.y, v.z);
    out << buf;
  }
}

}  // namespace expspec
