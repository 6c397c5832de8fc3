#pragma once

#include <cmath>
#include <random>

#include "expspec/linalg2.hpp"
#include "expspec/sphere.hpp"

namespace testing {

inline double entry_distance(const expspec::Mat2& x, const expspec::Mat2& y) {
  return std::max({std::abs(x.m00 - y.m00), std::abs(x.m01 - y.m01), std::abs(x.m10 - y.m10),
                   std::abs(x.m11 - y.m11)});
}

inline expspec::Mat2 random_mat2(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  auto c = [&] { return expspec::Complex{g(rng), g(rng)}; };
  return {c(), c(), c(), c()};
}

inline expspec::SpherePoint4 random_point4(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  expspec::Complex z0{g(rng), g(rng)};
  expspec::Complex z1{g(rng), g(rng)};
  double z2 = g(rng);
  const double n = std::sqrt(std::norm(z0) + std::norm(z1) + z2 * z2);
  return {z0 / n, z1 / n, z2 / n};
}

inline constexpr double kRt2 = 0.70710678118654752440;

}  // namespace testing
