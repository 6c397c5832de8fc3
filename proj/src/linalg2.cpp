#include "expspec/linalg2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expspec/errors.hpp"

namespace expspec {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool Mat2::is_finite() const { return finite(m00) && finite(m01) && finite(m10) && finite(m11); }

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
}

Mat2 operator*(Complex s, const Mat2& m) { return {s * m.m00, s * m.m01, s * m.m10, s * m.m11}; }

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
          x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

bool lex_less(Complex x, Complex y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

std::pair<Complex, Complex> eig2(const Mat2& m) {
  const Complex tr = m.trace();
  const Complex det = m.det();
  const Complex root = std::sqrt(tr * tr - 4.0 * det);
  // pick the sign that avoids cancellation in tr +- root
  const Complex q = (std::real(std::conj(tr) * root) >= 0.0) ? tr + root : tr - root;
  const Complex big = 0.5 * q;
  const Complex small = (big != Complex{}) ? det / big : Complex{};
  if (lex_less(small, big)) return {small, big};
  return {big, small};
}

double op_norm(const Mat2& m) {
  // Gram matrix G = m^H m is Hermitian: [[g00, g01], [conj(g01), g11]]
  const double g00 = std::norm(m.m00) + std::norm(m.m10);
  const double g11 = std::norm(m.m01) + std::norm(m.m11);
  const Complex g01 = std::conj(m.m00) * m.m01 + std::conj(m.m10) * m.m11;
  const double half_gap = 0.5 * (g00 - g11);
  const double lambda_max = 0.5 * (g00 + g11) + std::sqrt(half_gap * half_gap + std::norm(g01));
  return std::sqrt(std::max(lambda_max, 0.0));
}

Mat2 mat_inv(const Mat2& m) {
  const Complex det = m.det();
  const double scale = op_norm(m);
  if (!(std::abs(det) > kSingularRelTol * scale * scale)) {
    throw SingularMatrix("mat_inv: |det| below singularity threshold");
  }
  const Complex inv_det = 1.0 / det;
  return {inv_det * m.m11, -inv_det * m.m01, -inv_det * m.m10, inv_det * m.m00};
}

double condition_number(const Mat2& m) {
  try {
    return op_norm(m) * op_norm(mat_inv(m));
  } catch (const SingularMatrix&) {
    return std::numeric_limits<double>::infinity();
  }
}

double max_abs_entry(const Mat2& m) {
  return std::max({std::abs(m.m00), std::abs(m.m01), std::abs(m.m10), std::abs(m.m11)});
}

}  // namespace expspec
