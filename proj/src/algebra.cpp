#include "expspec/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "expspec/errors.hpp"

namespace expspec {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex inv_denominator(double z2) { return 1.0 / Complex{1.0, z2}; }

double residual_from_parts(const Mat2& a, const Mat2& b, const Mat2& ab, const Mat2& ba,
                           Complex mu, double* condition) {
  const Mat2 left = Mat2::identity() - mu * ab;
  const Mat2 u = mat_inv(left);
  if (condition != nullptr) *condition = op_norm(left) * op_norm(u);
  const Mat2 candidate = Mat2::identity() + mu * mat_mul(mat_mul(b, u), a);
  const Mat2 right = Mat2::identity() - mu * ba;
  return op_norm(mat_mul(right, candidate) - Mat2::identity());
}

}  // namespace

Mat2 eval_a(const SpherePoint4& x) {
  const Complex s = inv_denominator(x.z2);
  return {s * x.z0, 0.0, s * x.z1, 0.0};
}

Mat2 eval_b(const SpherePoint4& x) {
  const Complex s = inv_denominator(x.z2);
  return {s * std::conj(x.z0), s * std::conj(x.z1), 0.0, 0.0};
}

Mat2 eval_c(const SpherePoint4& x) {
  const Complex s = inv_denominator(x.z2);
  const Complex k = 2.0 * s * s;
  const Mat2 outer{x.z0 * std::conj(x.z0), x.z0 * std::conj(x.z1), x.z1 * std::conj(x.z0),
                   x.z1 * std::conj(x.z1)};
  return Mat2::identity() - k * outer;
}

Mat2 eval_one_minus_2ab(const SpherePoint4& x) {
  return Mat2::identity() - 2.0 * mat_mul(eval_a(x), eval_b(x));
}

Mat2 eval_one_minus_2ba(const SpherePoint4& x) {
  return Mat2::identity() - 2.0 * mat_mul(eval_b(x), eval_a(x));
}

Complex phi(double z2) {
  if (!(z2 >= -1.0 && z2 <= 1.0)) throw DomainError("phi: z2 outside [-1, 1]");
  const Complex q = (1.0 - kI * z2) / (1.0 + kI * z2);
  return -(q * q);
}

Complex product_eigenvalue(double z2) {
  const Complex s{1.0, z2};
  return (1.0 - z2 * z2) / (s * s);
}

double check_inverse_identity(const SpherePoint4& x, Complex mu) {
  const Mat2 a = eval_a(x);
  const Mat2 b = eval_b(x);
  return residual_from_parts(a, b, mat_mul(a, b), mat_mul(b, a), mu, nullptr);
}

InverseSweep inverse_identity_sweep(const SphereMesh4& mesh) {
  InverseSweep sweep;
  mesh.for_each([&](const SpherePoint4& x) {
    const Mat2 a = eval_a(x);
    const Mat2 b = eval_b(x);
    const Mat2 ab = mat_mul(a, b);
    const Mat2 ba = mat_mul(b, a);
    for (const Complex& mu : kInverseProbes) {
      double cond = 0.0;
      double residual = 0.0;
      try {
        residual = residual_from_parts(a, b, ab, ba, mu, &cond);
      } catch (const SingularMatrix&) {
        ++sweep.skipped;
        continue;
      }
      if (!(cond <= kMaxProbeCondition)) {
        ++sweep.skipped;
        continue;
      }
      ++sweep.evaluated;
      sweep.max_residual = std::max(sweep.max_residual, residual);
    }
  });
  return sweep;
}

struct AlgebraElement::Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  Complex alpha{};
  Complex beta{};

  Mat2 eval(const SpherePoint4& x) const {
    switch (kind) {
      case Kind::A:
        return eval_a(x);
      case Kind::B:
        return eval_b(x);
      case Kind::C_MAP:
        return eval_c(x);
      case Kind::ONE:
        return Mat2::identity();
      case Kind::PRODUCT:
        return mat_mul(lhs->eval(x), rhs->eval(x));
      case Kind::AFFINE_COMBINATION:
        return alpha * lhs->eval(x) + beta * rhs->eval(x);
    }
    return Mat2::zero();
  }
};

namespace {

std::string format_coefficient(Complex z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%g%+gi)", z.real(), z.imag());
  }
  return buf;
}

}  // namespace

AlgebraElement AlgebraElement::a() {
  return AlgebraElement(std::make_shared<const Node>(Node{Kind::A, "a", {}, {}, {}, {}}));
}

AlgebraElement AlgebraElement::b() {
  return AlgebraElement(std::make_shared<const Node>(Node{Kind::B, "b", {}, {}, {}, {}}));
}

AlgebraElement AlgebraElement::c() {
  return AlgebraElement(std::make_shared<const Node>(Node{Kind::C_MAP, "c", {}, {}, {}, {}}));
}

AlgebraElement AlgebraElement::one() {
  return AlgebraElement(std::make_shared<const Node>(Node{Kind::ONE, "1", {}, {}, {}, {}}));
}

AlgebraElement AlgebraElement::product(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  return AlgebraElement(std::make_shared<const Node>(
      Node{Kind::PRODUCT, lhs.name() + rhs.name(), lhs.node_, rhs.node_, {}, {}}));
}

AlgebraElement AlgebraElement::affine(Complex alpha, const AlgebraElement& x, Complex beta,
                                      const AlgebraElement& y) {
  std::string name = format_coefficient(alpha) + "*" + x.name() + " + " +
                     format_coefficient(beta) + "*" + y.name();
  return AlgebraElement(std::make_shared<const Node>(
      Node{Kind::AFFINE_COMBINATION, std::move(name), x.node_, y.node_, alpha, beta}));
}

AlgebraElement AlgebraElement::named(std::string name) const {
  Node copy = *node_;
  copy.name = std::move(name);
  return AlgebraElement(std::make_shared<const Node>(std::move(copy)));
}

AlgebraElement::Kind AlgebraElement::kind() const { return node_->kind; }

const std::string& AlgebraElement::name() const { return node_->name; }

Mat2 AlgebraElement::operator()(const SpherePoint4& x) const { return node_->eval(x); }

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  return AlgebraElement::product(lhs, rhs);
}

namespace elements {

AlgebraElement ab() { return AlgebraElement::a() * AlgebraElement::b(); }

AlgebraElement ba() { return AlgebraElement::b() * AlgebraElement::a(); }

AlgebraElement one_minus_2ab() {
  return AlgebraElement::affine(1.0, AlgebraElement::one(), -2.0, ab()).named("1-2ab");
}

AlgebraElement one_minus_2ba() {
  return AlgebraElement::affine(1.0, AlgebraElement::one(), -2.0, ba()).named("1-2ba");
}

}  // namespace elements

}  // namespace expspec
