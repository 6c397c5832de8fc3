#pragma once

#include <cstddef>
#include <vector>

#include "expspec/linalg2.hpp"
#include "expspec/sphere.hpp"

namespace expspec {

/// Point of S^{2n} in C^n x R.
struct SpherePoint2n {
  std::vector<Complex> z;
  double zn = 0.0;

  int n() const { return static_cast<int>(z.size()); }
  double norm() const;
};

/// Validates n >= 2 and the unit norm to 1e-12.
SpherePoint2n make_point2n(std::vector<Complex> z, double zn);
SpherePoint2n from_point4(const SpherePoint4& x);

/// Dense n x n complex matrix, row-major.
class MatN {
 public:
  explicit MatN(int n);
  static MatN identity(int n);
  static MatN from_mat2(const Mat2& m);

  int n() const { return n_; }
  Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  Complex operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }

  bool is_finite() const;
  double frobenius() const;
  /// Only valid for n == 2.
  Mat2 to_mat2() const;

  friend bool operator==(const MatN&, const MatN&) = default;

 private:
  int n_;
  std::vector<Complex> data_;
};

MatN operator+(const MatN& x, const MatN& y);
MatN operator-(const MatN& x, const MatN& y);
MatN operator*(Complex s, const MatN& m);
MatN mat_mul(const MatN& x, const MatN& y);

/// Coefficients c_0..c_n of det(lambda I - m) = sum c_k lambda^k (c_n = 1), Faddeev-LeVerrier.
std::vector<Complex> characteristic_polynomial(const MatN& m);

/// Upper bound on the second singular value: sqrt(n) ||Lambda^2 m||_F / ||m||_F.
double second_singular_value_bound(const MatN& m);

enum class FamilyVariant { EXACT, DROP_CONJUGATE };

/// a(x) = z e_1^T / (1 + i zn): first column z / (1 + i zn).
MatN eval_a_n(const SpherePoint2n& x);
/// b(x) = e_1 z^H / (1 + i zn): first row conj(z) / (1 + i zn).
/// DROP_CONJUGATE is a negative control.
MatN eval_b_n(const SpherePoint2n& x, FamilyVariant variant = FamilyVariant::EXACT);

MatN eval_one_minus_2ab_n(const SpherePoint2n& x, FamilyVariant variant = FamilyVariant::EXACT);
MatN eval_one_minus_2ba_n(const SpherePoint2n& x, FamilyVariant variant = FamilyVariant::EXACT);

/// Deterministic grid of S^{2n-1} in C^n. For n = 2 it is hopf_shell(shell_count);
/// for n > 2 it is (cos(beta) u, sin(beta) e^{i xi}) with u on the S^{2n-3} grid,
/// beta on ceil(m/4) intervals of [0, pi/2] and xi on m phases, degenerate rows collapsed.
std::vector<std::vector<Complex>> sphere_shell_2n_minus_1(int n, int shell_count);

struct MeshS2n {
  int n = 0;
  int lat_count = 0;
  int shell_count = 0;
  std::vector<SpherePoint2n> points;
};

/// latitude_rows(lat_count) in zn crossed with the S^{2n-1} shell, poles once each.
MeshS2n mesh_s2n(int n, int lat_count, int shell_count);

struct FamilyCheck {
  double ba_diagonal = 0.0;    ///< max ||(1 - 2ba)(x) - diag(phi(zn), 1, ..., 1)||_F
  double ab_closed_form = 0.0; ///< max ||(1 - 2ab)(x) - (I - 2 z z^H / (1 + i zn)^2)||_F
  double ab_eigenvalues = 0.0; ///< max coefficient error of charpoly(ab) vs lambda^{n-1}(lambda - mu)
  double max_residual = 0.0;
  double ab_ba_charpoly = 0.0; ///< max coefficient difference of charpoly(ab) and charpoly(ba)
  double max_rank_bound = 0.0; ///< max second singular value bound of a(x), b(x)
  std::size_t points = 0;
};

/// Throws UnsupportedN unless n is 2 or 3, or if mesh.n != n.
FamilyCheck family_identity_check(int n, const MeshS2n& mesh,
                                  FamilyVariant variant = FamilyVariant::EXACT);

/// true if a, b and both 1 - 2(.) products agree bit for bit with the algebra module.
bool matches_algebra_bitwise(const SphereMesh4& mesh);

}  // namespace expspec
