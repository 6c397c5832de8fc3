#include <doctest.h>

#include <tuple>

#include "expspec/errors.hpp"
#include "expspec/linalg2.hpp"
#include "helpers.hpp"

using namespace expspec;
using testing::entry_distance;

TEST_CASE("mat_mul") {
  CHECK(mat_mul(Mat2::identity(), Mat2::identity()) == Mat2::identity());
  const Mat2 shift{0.0, 1.0, 0.0, 0.0};
  CHECK(mat_mul(shift, shift) == Mat2::zero());
  // a(1,0,0) b(1,0,0)
  const Mat2 e11{1.0, 0.0, 0.0, 0.0};
  CHECK(mat_mul(e11, e11) == e11);
}

TEST_CASE("eig2 examples") {
  auto [l0, l1] = eig2(Mat2::identity());
  CHECK(l0 == Complex{1.0});
  CHECK(l1 == Complex{1.0});

  std::tie(l0, l1) = eig2(Mat2::diag(-1.0, 1.0));
  CHECK(l0 == Complex{-1.0});
  CHECK(l1 == Complex{1.0});

  // rank one with small trace: the stable formula keeps the zero root exact
  std::tie(l0, l1) = eig2(Mat2{1e-9, 1.0, 0.0, 0.0});
  CHECK(std::abs(l0) == 0.0);
  CHECK(std::abs(l1 - 1e-9) < 1e-24);
}

TEST_CASE("eig2 sum and product on random matrices") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Mat2 m = testing::random_mat2(rng);
    const auto [l0, l1] = eig2(m);
    const double scale = std::max(1.0, op_norm(m) * op_norm(m));
    CHECK(std::abs(l0 * l1 - m.det()) <= 1e-12 * scale);
    CHECK(std::abs(l0 + l1 - m.trace()) <= 1e-12 * std::max(1.0, op_norm(m)));
    CHECK_FALSE(lex_less(l1, l0));
  }
}

TEST_CASE("mat_inv") {
  CHECK(mat_inv(Mat2::identity()) == Mat2::identity());
  CHECK(entry_distance(mat_inv(Mat2::diag(2.0, 4.0)), Mat2::diag(0.5, 0.25)) == 0.0);
  CHECK(mat_inv(Mat2::diag(-1.0, 1.0)) == Mat2::diag(-1.0, 1.0));
  CHECK_THROWS_AS(mat_inv(Mat2::zero()), SingularMatrix);
  CHECK_THROWS_AS(mat_inv(Mat2{1.0, 1.0, 1.0, 1.0}), SingularMatrix);
  // scale invariance of the threshold
  CHECK_NOTHROW(mat_inv(Mat2::diag(1e-100, 1e-100)));

  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const Mat2 m = testing::random_mat2(rng, 3.0);
    if (!(condition_number(m) < 1e6)) continue;
    ++checked;
    CHECK(op_norm(mat_mul(m, mat_inv(m)) - Mat2::identity()) <= 1e-10);
  }
  CHECK(checked > 1900);
}

TEST_CASE("op_norm") {
  CHECK(op_norm(Mat2::identity()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(op_norm(Mat2::diag(3.0, 0.0)) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(op_norm(Mat2{0.0, 2.0, 0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(op_norm(Mat2::zero()) == 0.0);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Mat2 x = testing::random_mat2(rng);
    const Mat2 y = testing::random_mat2(rng);
    CHECK(op_norm(mat_mul(x, y)) <= op_norm(x) * op_norm(y) * (1 + 1e-12));
    // largest singular value dominates every entry and is at most the Frobenius norm
    CHECK(op_norm(x) >= max_abs_entry(x) * (1 - 1e-12));
  }
}
