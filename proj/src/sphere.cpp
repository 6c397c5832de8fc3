#include "expspec/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "expspec/errors.hpp"

namespace expspec {

using std::numbers::pi;

double SpherePoint3::norm() const { return std::sqrt(std::norm(w0) + std::norm(w1)); }

double SpherePoint4::norm() const { return std::sqrt(std::norm(z0) + std::norm(z1) + z2 * z2); }

SpherePoint3 make_point3(Complex w0, Complex w1) {
  SpherePoint3 p{w0, w1};
  if (!(std::abs(std::norm(w0) + std::norm(w1) - 1.0) <= kSphereTol)) {
    throw DomainError("point is not on S^3");
  }
  return p;
}

SpherePoint4 make_point4(Complex z0, Complex z1, double z2) {
  SpherePoint4 p{z0, z1, z2};
  if (!(std::abs(std::norm(z0) + std::norm(z1) + z2 * z2 - 1.0) <= kSphereTol) || z2 < -1.0 ||
      z2 > 1.0) {
    throw DomainError("point is not on S^4");
  }
  return p;
}

SpherePoint3 operator+(const SpherePoint3& x, const SpherePoint3& y) {
  return {x.w0 + y.w0, x.w1 + y.w1};
}

SpherePoint3 operator-(const SpherePoint3& x, const SpherePoint3& y) {
  return {x.w0 - y.w0, x.w1 - y.w1};
}

SpherePoint3 operator*(double s, const SpherePoint3& x) { return {s * x.w0, s * x.w1}; }

double distance(const SpherePoint3& x, const SpherePoint3& y) { return (x - y).norm(); }

double distance(const SpherePoint4& x, const SpherePoint4& y) {
  const double dz = x.z2 - y.z2;
  return std::sqrt(std::norm(x.z0 - y.z0) + std::norm(x.z1 - y.z1) + dz * dz);
}

int hemisphere_sign(const SpherePoint4& x) {
  if (x.z2 > 0.0) return 1;
  if (x.z2 < 0.0) return -1;
  return 0;
}

std::vector<Latitude> latitude_rows(int lat_count) {
  if (lat_count < 3) throw InvalidResolution("lat_count must be >= 3");
  const int last = lat_count - 1;
  // theta index k runs from +last (north) to -last (south) in steps of 2;
  // an even lat_count gets k = 0 spliced in.
  std::vector<int> ks;
  for (int j = 0; j < lat_count; ++j) ks.push_back(last - 2 * j);
  if (lat_count % 2 == 0) {
    ks.insert(std::find_if(ks.begin(), ks.end(), [](int k) { return k < 0; }), 0);
  }

  std::vector<Latitude> rows;
  rows.reserve(ks.size());
  for (int k : ks) {
    Latitude row;
    if (k == last) {
      row.z2 = 1.0;
    } else if (k == -last) {
      row.z2 = -1.0;
    } else if (k == 0) {
      row.z2 = 0.0;
    } else {
      row.z2 = std::tan(0.25 * pi * static_cast<double>(k) / static_cast<double>(last));
    }
    row.radius = std::sqrt((1.0 - row.z2) * (1.0 + row.z2));
    row.psi = std::atan2(row.radius, row.z2);
    rows.push_back(row);
  }
  return rows;
}

std::size_t shell_point_count(int shell_count) {
  const auto m = static_cast<std::size_t>(shell_count);
  const std::size_t intervals = (m + 3) / 4;
  return 2 * m + (intervals - 1) * m * m;
}

ShellGrid hopf_shell(int shell_count) {
  if (shell_count < 8) throw InvalidResolution("shell_count must be >= 8");
  ShellGrid grid;
  grid.shell_count = shell_count;
  grid.eta_intervals = (shell_count + 3) / 4;
  const int m = shell_count;
  const int big_k = grid.eta_intervals;

  std::vector<Complex> phases(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    phases[static_cast<std::size_t>(i)] = std::polar(1.0, 2.0 * pi * i / m);
  }
  auto push = [&](Complex w0, Complex w1) {
    const double n = std::sqrt(std::norm(w0) + std::norm(w1));
    grid.points.push_back({w0 / n, w1 / n});
  };

  grid.points.reserve(shell_point_count(m));
  for (const Complex& e : phases) push(e, 0.0);
  for (int k = 1; k < big_k; ++k) {
    const double eta = 0.5 * pi * k / big_k;
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    for (const Complex& e1 : phases) {
      for (const Complex& e2 : phases) push(c * e1, s * e2);
    }
  }
  for (const Complex& e : phases) push(0.0, e);

  grid.covering_radius = 0.5 * (0.5 * pi / big_k + 2.0 * pi / m);
  return grid;
}

SphereMesh4::SphereMesh4(int lat_count, int shell_count)
    : lat_count_(lat_count), rows_(latitude_rows(lat_count)), shell_(hopf_shell(shell_count)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].z2 == 0.0) equator_row_ = r;
  }
}

std::size_t SphereMesh4::size() const { return 2 + (rows_.size() - 2) * shell_.points.size(); }

std::size_t SphereMesh4::row_size(std::size_t r) const {
  return (r == 0 || r + 1 == rows_.size()) ? 1 : shell_.points.size();
}

SpherePoint4 SphereMesh4::point(std::size_t r, std::size_t k) const {
  const Latitude& row = rows_[r];
  if (r == 0 || r + 1 == rows_.size()) return {0.0, 0.0, row.z2};
  const SpherePoint3& w = shell_.points[k];
  return {row.radius * w.w0, row.radius * w.w1, row.z2};
}

SpherePoint4 SphereMesh4::operator[](std::size_t i) const {
  if (i == 0) return point(0, 0);
  if (i + 1 == size()) return point(rows_.size() - 1, 0);
  const std::size_t s = shell_.points.size();
  return point(1 + (i - 1) / s, (i - 1) % s);
}

std::vector<SpherePoint4> SphereMesh4::equator() const {
  std::vector<SpherePoint4> out;
  out.reserve(shell_.points.size());
  for (std::size_t k = 0; k < shell_.points.size(); ++k) out.push_back(point(equator_row_, k));
  return out;
}

double SphereMesh4::cell_covering_radius(std::size_t r) const {
  const Latitude& lo = rows_[r];
  const Latitude& hi = rows_[r + 1];
  return 0.5 * (hi.psi - lo.psi) + std::max(lo.radius, hi.radius) * shell_.covering_radius;
}

double SphereMesh4::covering_radius() const {
  double rho = 0.0;
  for (std::size_t r = 0; r + 1 < rows_.size(); ++r) rho = std::max(rho, cell_covering_radius(r));
  return rho;
}

std::vector<SpherePoint4> SphereMesh4::points() const {
  std::vector<SpherePoint4> out;
  out.reserve(size());
  for_each([&](const SpherePoint4& p) { out.push_back(p); });
  return out;
}

SphereMesh4 mesh_s4(int lat_count, int shell_count) { return SphereMesh4(lat_count, shell_count); }

std::vector<SpherePoint4> equator_mesh(int shell_count) {
  const ShellGrid grid = hopf_shell(shell_count);
  std::vector<SpherePoint4> out;
  out.reserve(grid.points.size());
  for (const SpherePoint3& w : grid.points) out.push_back({1.0 * w.w0, 1.0 * w.w1, 0.0});
  return out;
}

void write_mesh_csv(std::ostream& out, const SphereMesh4& mesh) {
  out << "re_z0,im_z0,re_z1,im_z1,z2\n";
  char buf[160];
  mesh.for_each([&](const SpherePoint4& p) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.z0.real(), p.z0.imag(),
                  p.z1.real(), p.z1.imag(), p.z2);
    out << buf;
  });
}

}  // namespace expspec
