#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "expspec/linalg2.hpp"

namespace expspec {

/// Point of S^3 viewed as {(w0, w1) in C^2 : |w0|^2 + |w1|^2 = 1}.
struct SpherePoint3 {
  Complex w0{};
  Complex w1{};

  double norm() const;
  bool operator==(const SpherePoint3&) const = default;
};

/// Point of S^4 viewed as {(z0, z1, z2) in C^2 x R : |z0|^2 + |z1|^2 + z2^2 = 1}.
struct SpherePoint4 {
  Complex z0{};
  Complex z1{};
  double z2 = 0.0;

  double norm() const;
  bool operator==(const SpherePoint4&) const = default;
};

inline constexpr double kSphereTol = 1e-12;

/// Validating constructors; throw DomainError when the point is off the sphere.
SpherePoint3 make_point3(Complex w0, Complex w1);
SpherePoint4 make_point4(Complex z0, Complex z1, double z2);

SpherePoint3 operator+(const SpherePoint3& x, const SpherePoint3& y);
SpherePoint3 operator-(const SpherePoint3& x, const SpherePoint3& y);
SpherePoint3 operator*(double s, const SpherePoint3& x);

/// Euclidean distance in C^2 = R^4.
double distance(const SpherePoint3& x, const SpherePoint3& y);
/// Chordal distance in C^2 x R = R^5.
double distance(const SpherePoint4& x, const SpherePoint4& y);

/// Sign of z2 (0 only for an exact zero).
int hemisphere_sign(const SpherePoint4& x);

struct Latitude {
  double z2 = 0.0;
  double radius = 0.0;  ///< sqrt(1 - z2^2)
  double psi = 0.0;     ///< polar angle from the north pole
};

/// Latitude rows from the north pole (z2 = 1) to the south pole (z2 = -1).
///
/// Rows are equispaced in theta = 4 atan(z2), i.e. z2 = tan(theta / 4) for
/// theta_j = pi (lat_count - 1 - 2j) / (lat_count - 1). That spacing makes the
/// phase of phi(z2) = -((1 - i z2)/(1 + i z2))^2 uniform over the rows. An odd
/// lat_count hits z2 = 0 exactly; for an even count an extra equator row is
/// inserted, so the result has lat_count + 1 rows.
std::vector<Latitude> latitude_rows(int lat_count);

/// Deterministic S^3 grid in Hopf coordinates
///   w0 = cos(eta) e^{i xi1},  w1 = sin(eta) e^{i xi2},
/// xi1, xi2 in {2 pi k / m}, eta in {(pi/2) k / K} with K = ceil(m / 4).
/// The degenerate rows eta = 0 and eta = pi/2 keep only the live angle, so the
/// grid has 2m + (K - 1) m^2 points. The first point is (1, 0).
struct ShellGrid {
  int shell_count = 0;
  int eta_intervals = 0;
  std::vector<SpherePoint3> points;
  /// Geodesic covering radius bound on S^3: (d_eta + d_xi) / 2.
  double covering_radius = 0.0;
};

ShellGrid hopf_shell(int shell_count);

std::size_t shell_point_count(int shell_count);

/// Product mesh of S^4: latitude rows times one S^3 shell, poles stored once.
///
/// Point order: north pole, then each interior row in shell order, then the
/// south pole. The mesh is immutable and stores only the rows and the shell;
/// points are formed on demand.
class SphereMesh4 {
 public:
  SphereMesh4(int lat_count, int shell_count);

  int lat_count() const { return lat_count_; }
  int shell_count() const { return shell_.shell_count; }

  std::size_t size() const;
  SpherePoint4 operator[](std::size_t i) const;

  std::size_t row_count() const { return rows_.size(); }
  const Latitude& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Latitude>& rows() const { return rows_; }
  /// 1 for the pole rows, shell size otherwise.
  std::size_t row_size(std::size_t r) const;
  SpherePoint4 point(std::size_t r, std::size_t k) const;

  const ShellGrid& shell() const { return shell_; }
  std::size_t equator_row() const { return equator_row_; }
  std::vector<SpherePoint4> equator() const;

  /// Upper bound on the geodesic covering radius of S^4 by the mesh.
  double covering_radius() const;
  /// Covering bound for the band between rows r and r + 1.
  double cell_covering_radius(std::size_t r) const;

  std::vector<SpherePoint4> points() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t n = row_size(r);
      for (std::size_t k = 0; k < n; ++k) fn(point(r, k));
    }
  }

 private:
  int lat_count_;
  std::vector<Latitude> rows_;
  ShellGrid shell_;
  std::size_t equator_row_ = 0;
};

/// Validates lat_count >= 3 and shell_count >= 8.
SphereMesh4 mesh_s4(int lat_count, int shell_count);

/// The shell grid embedded at z2 = 0; identical to the equator row of mesh_s4.
std::vector<SpherePoint4> equator_mesh(int shell_count);

/// CSV with header re_z0,im_z0,re_z1,im_z1,z2 and 17 significant digits.
void write_mesh_csv(std::ostream& out, const SphereMesh4& mesh);

}  // namespace expspec
