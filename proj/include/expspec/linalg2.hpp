#pragma once

#include <complex>
#include <utility>

namespace expspec {

using Complex = std::complex<double>;

/// Complex 2x2 matrix [[m00, m01], [m10, m11]].
struct Mat2 {
  Complex m00{};
  Complex m01{};
  Complex m10{};
  Complex m11{};

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 zero() { return {}; }
  static constexpr Mat2 diag(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

  Complex trace() const { return m00 + m11; }
  Complex det() const { return m00 * m11 - m01 * m10; }
  bool is_finite() const;

  bool operator==(const Mat2&) const = default;
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& m);

Mat2 mat_mul(const Mat2& x, const Mat2& y);

/// Roots of lambda^2 - tr(m) lambda + det(m), ordered lexicographically by (re, im).
///
/// The larger-magnitude root is formed first; the other is det / root, which
/// keeps the small eigenvalue of near-rank-one matrices accurate.
std::pair<Complex, Complex> eig2(const Mat2& m);

/// Throws SingularMatrix when |det| <= kSingularRelTol * op_norm(m)^2.
Mat2 mat_inv(const Mat2& m);

/// Largest singular value, from the closed-form eigenvalues of the Gram matrix.
double op_norm(const Mat2& m);

/// op_norm(m) * op_norm(inverse); infinity when m is singular.
double condition_number(const Mat2& m);

double max_abs_entry(const Mat2& m);

/// Lexicographic (re, im) ordering used for all eigenvalue sets.
bool lex_less(Complex x, Complex y);

inline constexpr double kSingularRelTol = 1e-14;

}  // namespace expspec
