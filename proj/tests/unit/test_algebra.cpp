#include <doctest.h>

#include "expspec/algebra.hpp"
#include "expspec/errors.hpp"
#include "helpers.hpp"

using namespace expspec;
using testing::entry_distance;
using testing::kRt2;

namespace {

const SpherePoint4 kE0{1.0, 0.0, 0.0};
const SpherePoint4 kE1{0.0, 1.0, 0.0};
const SpherePoint4 kNorth{0.0, 0.0, 1.0};
const SpherePoint4 kSouth{0.0, 0.0, -1.0};

// closed forms written out by hand, independent of eval_*
Mat2 c_closed_form(const SpherePoint4& x) {
  const Complex s{1.0, x.z2};
  const Complex k = 2.0 / (s * s);
  return {1.0 - k * std::norm(x.z0), -k * x.z0 * std::conj(x.z1), -k * x.z1 * std::conj(x.z0),
          1.0 - k * std::norm(x.z1)};
}

Complex phi_closed_form(double t) {
  // phi(t) = -exp(-4 i atan t)
  return -std::polar(1.0, -4.0 * std::atan(t));
}

}  // namespace

TEST_CASE("a, b, c at special points") {
  CHECK(eval_a(kE0) == Mat2{1.0, 0.0, 0.0, 0.0});
  CHECK(eval_a(kNorth) == Mat2::zero());
  CHECK(eval_a(kE1) == Mat2{0.0, 0.0, 1.0, 0.0});
  CHECK(eval_b(kE0) == Mat2{1.0, 0.0, 0.0, 0.0});
  CHECK(eval_b(kSouth) == Mat2::zero());
  CHECK(eval_b(kE1) == Mat2{0.0, 1.0, 0.0, 0.0});
  CHECK(eval_c(kNorth) == Mat2::identity());
  CHECK(entry_distance(eval_c(kE0), Mat2::diag(-1.0, 1.0)) == 0.0);
  CHECK(entry_distance(eval_c(kE1), Mat2::diag(1.0, -1.0)) == 0.0);
}

TEST_CASE("1 - 2ab and 1 - 2ba at special points") {
  CHECK(eval_one_minus_2ab(kNorth) == Mat2::identity());
  const SpherePoint4 mid{kRt2, kRt2, 0.0};
  CHECK(entry_distance(eval_one_minus_2ab(mid), Mat2{0.0, -1.0, -1.0, 0.0}) <= 1e-15);
  CHECK(entry_distance(eval_one_minus_2ba(kE0), Mat2::diag(-1.0, 1.0)) == 0.0);
  CHECK(entry_distance(eval_one_minus_2ba(kNorth), Mat2::identity()) <= 1e-15);
  CHECK(entry_distance(eval_one_minus_2ba(kSouth), Mat2::identity()) <= 1e-15);
}

TEST_CASE("phi") {
  CHECK(std::abs(phi(0.0) - Complex{-1.0}) == 0.0);
  CHECK(std::abs(phi(1.0) - Complex{1.0}) <= 1e-15);
  CHECK(std::abs(phi(-1.0) - Complex{1.0}) <= 1e-15);
  CHECK_THROWS_AS(phi(1.0000001), DomainError);
  CHECK_THROWS_AS(phi(std::nan("")), DomainError);
  for (int i = 0; i <= 2000; ++i) {
    const double t = -1.0 + i / 1000.0;
    CHECK(std::abs(std::abs(phi(t)) - 1.0) <= 1e-14);
    CHECK(std::abs(phi(t) - phi_closed_form(t)) <= 1e-14);
  }
}

TEST_CASE("identity and diagonal laws on a mesh") {
  const SphereMesh4 mesh = mesh_s4(17, 16);
  double identity = 0.0;
  double diagonal = 0.0;
  double rank_one = 0.0;
  double eig = 0.0;
  mesh.for_each([&](const SpherePoint4& x) {
    identity = std::max(identity, entry_distance(eval_one_minus_2ab(x), c_closed_form(x)));
    diagonal = std::max(diagonal,
                        entry_distance(eval_one_minus_2ba(x), Mat2::diag(phi_closed_form(x.z2), 1.0)));
    const Complex s{1.0, x.z2};
    const Mat2 a = eval_a(x);
    const Mat2 b = eval_b(x);
    rank_one = std::max(rank_one, entry_distance(mat_mul(a, a), (x.z0 / s) * a));
    rank_one = std::max(rank_one, entry_distance(mat_mul(b, b), (std::conj(x.z0) / s) * b));
    const auto [l0, l1] = eig2(mat_mul(a, b));
    const Complex mu = (1.0 - x.z2 * x.z2) / (s * s);
    eig = std::max(eig, std::min(std::max(std::abs(l0), std::abs(l1 - mu)),
                                 std::max(std::abs(l1), std::abs(l0 - mu))));
  });
  CHECK(identity <= 1e-13);
  CHECK(diagonal <= 1e-13);
  CHECK(rank_one <= 1e-13);
  CHECK(eig <= 1e-12);
}

TEST_CASE("check_inverse_identity") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) CHECK(check_inverse_identity(testing::random_point4(rng), 0.0) == 0.0);
  CHECK(check_inverse_identity(kNorth, 2.0) <= 1e-12);
  // ab has eigenvalue 1 on the equator, so mu = 1 is singular there
  CHECK_THROWS_AS(check_inverse_identity({kRt2, kRt2, 0.0}, 1.0), SingularMatrix);
  CHECK(check_inverse_identity({kRt2, kRt2, 0.0}, 0.5) <= 1e-12);

  const InverseSweep sweep = inverse_identity_sweep(mesh_s4(9, 8));
  CHECK(sweep.max_residual <= 1e-10);
  CHECK(sweep.evaluated + sweep.skipped == 8 * mesh_s4(9, 8).size());
  CHECK(sweep.skipped > 0);
  CHECK(sweep.evaluated > sweep.skipped);
}

TEST_CASE("AlgebraElement") {
  std::mt19937_64 rng(23);
  const auto one = AlgebraElement::one();
  const auto ab = elements::ab();
  const auto lhs = elements::one_minus_2ab();
  CHECK(ab.kind() == AlgebraElement::Kind::PRODUCT);
  CHECK(lhs.kind() == AlgebraElement::Kind::AFFINE_COMBINATION);
  CHECK(lhs.name() == "1-2ab");
  for (int i = 0; i < 100; ++i) {
    const SpherePoint4 x = testing::random_point4(rng);
    CHECK(one(x) == Mat2::identity());
    CHECK(entry_distance(ab(x), mat_mul(eval_a(x), eval_b(x))) == 0.0);
    CHECK(entry_distance(lhs(x), eval_c(x)) <= 1e-14);
    CHECK(entry_distance(elements::one_minus_2ba()(x), eval_one_minus_2ba(x)) <= 1e-15);
    CHECK(AlgebraElement::c()(x) == eval_c(x));
  }
}
