#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>

#include "expspec/linalg2.hpp"
#include "expspec/sphere.hpp"

namespace expspec {

// Pointwise formulas for the elements of A = C(S^4, M_2(C)):
//   a(z) = 1/(1 + i z2) [[z0, 0], [z1, 0]]
//   b(z) = 1/(1 + i z2) [[conj z0, conj z1], [0, 0]]
//   c(z) = I - 2/(1 + i z2)^2 [[z0 conj z0, z0 conj z1], [z1 conj z0, z1 conj z1]]
// The products ab and ba are always formed by matrix multiplication; the
// closed forms of c and phi are the independent side of every identity check.

Mat2 eval_a(const SpherePoint4& x);
Mat2 eval_b(const SpherePoint4& x);
Mat2 eval_c(const SpherePoint4& x);
Mat2 eval_one_minus_2ab(const SpherePoint4& x);
Mat2 eval_one_minus_2ba(const SpherePoint4& x);

/// phi(z2) = -((1 - i z2) / (1 + i z2))^2, a unimodular number. DomainError outside [-1, 1].
Complex phi(double z2);

/// Nonzero eigenvalue (1 - z2^2) / (1 + i z2)^2 of ab(x) and ba(x).
Complex product_eigenvalue(double z2);

/// ||(I - mu ba)(I + mu b u a) - I|| with u = (I - mu ab)^{-1}, all at x.
///
/// If I - mu ab is invertible with inverse u then I - mu ba has inverse
/// I + mu b u a. Throws SingularMatrix when I - mu ab(x) is singular.
double check_inverse_identity(const SpherePoint4& x, Complex mu);

/// Fixed probe values mu for the inverse-identity sweep (lambda = 1/mu).
inline const std::array<Complex, 8> kInverseProbes = {
    Complex{0.5, 0.0}, Complex{1.0, 0.0},  Complex{2.0, 0.0},  Complex{-1.0, 0.0},
    Complex{0.0, 1.0}, Complex{0.0, -2.0}, Complex{1.0, 1.0}, Complex{4.0, 0.0}};

inline constexpr double kMaxProbeCondition = 1e6;

struct InverseSweep {
  double max_residual = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  ///< singular or cond(I - mu ab) > kMaxProbeCondition
};

/// check_inverse_identity over every mesh point and probe value, skipping
/// ill-conditioned cases.
InverseSweep inverse_identity_sweep(const SphereMesh4& mesh);

/// Evaluable element of C(S^4, M_2(C)) built from a, b, c, 1 by products and
/// affine combinations.
class AlgebraElement {
 public:
  enum class Kind { A, B, C_MAP, ONE, PRODUCT, AFFINE_COMBINATION };

  static AlgebraElement a();
  static AlgebraElement b();
  static AlgebraElement c();
  static AlgebraElement one();
  static AlgebraElement product(const AlgebraElement& lhs, const AlgebraElement& rhs);
  /// alpha * x + beta * y
  static AlgebraElement affine(Complex alpha, const AlgebraElement& x, Complex beta,
                               const AlgebraElement& y);

  AlgebraElement named(std::string name) const;

  Kind kind() const;
  const std::string& name() const;
  Mat2 operator()(const SpherePoint4& x) const;

  struct Node;

 private:
  explicit AlgebraElement(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs);

namespace elements {
AlgebraElement ab();
AlgebraElement ba();
AlgebraElement one_minus_2ab();
AlgebraElement one_minus_2ba();
}  // namespace elements

}  // namespace expspec
