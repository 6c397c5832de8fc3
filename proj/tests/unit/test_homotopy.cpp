#include <doctest.h>

#include "expspec/algebra.hpp"
#include "expspec/certificates.hpp"
#include "expspec/errors.hpp"
#include "expspec/homotopy.hpp"
#include "helpers.hpp"

using namespace expspec;
using testing::kRt2;

namespace {

double dist3(const SpherePoint3& x, const SpherePoint3& y) { return distance(x, y); }

// f written out from the displayed second column of c, independent of eval_c.
SpherePoint3 f_closed_form(const SpherePoint4& x) {
  const Complex s{1.0, x.z2};
  const Complex p0 = -2.0 * x.z0 * std::conj(x.z1) / (s * s);
  const Complex p1 = 1.0 - 2.0 * std::norm(x.z1) / (s * s);
  const double n = std::sqrt(std::norm(p0) + std::norm(p1));
  return {p0 / n, p1 / n};
}

}  // namespace

TEST_CASE("hopf map") {
  S2Point p = hopf({1.0, 0.0});
  CHECK(std::abs(p.p1) == 0.0);
  CHECK(p.p2 == 1.0);
  p = hopf({0.0, 1.0});
  CHECK(p.p2 == -1.0);
  p = hopf({kRt2, kRt2});
  CHECK(std::abs(p.p1 - Complex{-1.0}) <= 1e-15);
  CHECK(std::abs(p.p2) <= 1e-15);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const SpherePoint4 x = testing::random_point4(rng);
    const double r = std::sqrt(std::norm(x.z0) + std::norm(x.z1));
    const S2Point q = hopf({x.z0 / r, x.z1 / r});
    CHECK(std::abs(std::sqrt(std::norm(q.p1) + q.p2 * q.p2) - 1.0) <= 1e-13);
  }
}

TEST_CASE("suspension Eh") {
  CHECK(suspension_eh({0.0, 0.0, 1.0}) == SpherePoint3{0.0, Complex{0.0, 1.0}});
  CHECK(suspension_eh({0.0, 0.0, -1.0}) == SpherePoint3{0.0, Complex{0.0, -1.0}});
  const SpherePoint3 e = suspension_eh({kRt2, 0.0, kRt2});
  CHECK(dist3(e, {0.0, Complex{kRt2, kRt2}}) <= 1e-15);

  for (const SpherePoint4& x : equator_mesh(12)) {
    const S2Point h = hopf({x.z0, x.z1});
    CHECK(dist3(suspension_eh(x), {h.p1, h.p2}) <= 1e-15);
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) CHECK(std::abs(suspension_eh(testing::random_point4(rng)).norm() - 1.0) <= 1e-12);

  // the formula approaches (0, +-i) near the poles
  const ShellGrid shell = hopf_shell(16);
  double previous = INFINITY;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double d = eh_pole_approach(shell, eps);
    CHECK(d < previous);
    CHECK(d <= 2.0 * std::sqrt(2.0 * eps));
    previous = d;
  }
}

TEST_CASE("f = pc / |pc|") {
  for (const SpherePoint4& x : equator_mesh(12)) {
    const SpherePoint3 f = f_map(x);
    CHECK(dist3(f, {-2.0 * x.z0 * std::conj(x.z1), std::norm(x.z0) - std::norm(x.z1)}) <= 1e-15);
  }
  CHECK(f_map({0.0, 0.0, 1.0}) == SpherePoint3{0.0, 1.0});
  CHECK(dist3(f_map({0.0, 1.0, 0.0}), {0.0, -1.0}) <= 1e-15);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const SpherePoint4 x = testing::random_point4(rng);
    CHECK(dist3(f_map(x), f_closed_form(x)) <= 1e-14);
    // closed form of f in terms of Eh's ingredients
    const Complex h1 = -2.0 * x.z0 * std::conj(x.z1);
    const double h2 = std::norm(x.z0) - std::norm(x.z1);
    const Complex rot = std::polar(1.0, -2.0 * std::atan(x.z2));
    const SpherePoint3 g{rot * h1 / (1.0 + x.z2 * x.z2),
                         rot * Complex{h2, 2.0 * x.z2} / (1.0 + x.z2 * x.z2)};
    CHECK(dist3(f_map(x), g) <= 1e-14);
  }
}

TEST_CASE("antipodal gap") {
  const SphereMesh4 mesh = mesh_s4(9, 8);
  GapOptions opts;
  const auto self = antipodal_gap(mesh, MapS4toS3::f(), MapS4toS3::f(), opts);
  CHECK(self.min_gap == doctest::Approx(2.0).epsilon(1e-14));
  const auto anti = MapS4toS3::custom("-f", [](const SpherePoint4& x) { return -1.0 * f_map(x); });
  CHECK(antipodal_gap(mesh, MapS4toS3::f(), anti, opts).min_gap == 0.0);

  const auto fine = antipodal_gap(mesh_s4(33, 32));
  CHECK(fine.min_gap > 0.1);
  CHECK(fine.cap_bound == doctest::Approx(0.95));
  CHECK(fine.cap_sample_min >= fine.cap_bound);
  CHECK(fine.certified_lower_bound <= fine.min_gap);
}

TEST_CASE("gap lower bound holds against random points") {
  // the mesh minimum is about 1.2348; random points stay in the same range
  std::mt19937_64 rng(4);
  double worst = INFINITY;
  for (int i = 0; i < 200000; ++i) {
    const SpherePoint4 x = testing::random_point4(rng);
    worst = std::min(worst, (f_map(x) + suspension_eh(x)).norm());
  }
  CHECK(worst >= 1.2);
  CHECK(worst <= 1.3);
}

TEST_CASE("straight-line homotopy") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const SpherePoint4 x = testing::random_point4(rng);
    CHECK(dist3(straightline_homotopy(x, 0.0), f_map(x)) <= 1e-15);
    CHECK(dist3(straightline_homotopy(x, 1.0), suspension_eh(x)) <= 1e-15);
  }
  for (const SpherePoint4& x : equator_mesh(8)) CHECK(dist3(straightline_homotopy(x, 0.5), f_map(x)) <= 1e-15);

  const auto anti = MapS4toS3::custom("-f", [](const SpherePoint4& x) { return -1.0 * f_map(x); });
  CHECK_THROWS_AS(straightline_homotopy({1.0, 0.0, 0.0}, 0.5, MapS4toS3::f(), anti),
                  DegenerateNormalization);
  CHECK(straightline_unit_deviation(mesh_s4(9, 8), 33, MapS4toS3::f(), MapS4toS3::eh()) <= 1e-12);
  CHECK(std::isinf(straightline_unit_deviation(mesh_s4(3, 8), 3, MapS4toS3::f(), anti)));

  const auto grid = t_grid(33);
  CHECK(grid.size() == 33);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK_THROWS(t_grid(1));
}

TEST_CASE("null-homotopy of 1 - 2ba") {
  CHECK(null_homotopy_ba({1.0, 0.0, 0.0}, 0.0) == Mat2::diag(-1.0, 1.0));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const SpherePoint4 x = testing::random_point4(rng);
    CHECK(testing::entry_distance(null_homotopy_ba(x, 1.0), Mat2::identity()) <= 1e-15);
    for (double t : t_grid(9)) CHECK(std::abs(std::abs(null_homotopy_ba(x, t).det()) - 1.0) <= 1e-13);
  }
  CHECK_THROWS_AS(null_homotopy_ba({1.0, 0.0, 0.0}, 1.5), DomainError);

  const auto sweep = null_homotopy_sweep(mesh_s4(17, 16), 33);
  CHECK(sweep.max_det_deviation <= 1e-13);
  CHECK(sweep.start_residual <= 1e-13);
  CHECK(sweep.end_residual <= 1e-15);
}

TEST_CASE("hemisphere preservation") {
  const SpherePoint3 e = suspension_eh({kRt2, 0.0, kRt2});
  CHECK(e.w1.imag() == doctest::Approx(kRt2));
  CHECK(f_map({0.0, 0.0, -1.0}).w1.imag() == 0.0);
  const SphereMesh4 mesh = mesh_s4(17, 16);
  CHECK(hemisphere_preservation(mesh) >= -1e-13);
  const auto flipped = MapS4toS3::custom("conj", [](const SpherePoint4& x) {
    const SpherePoint3 w = suspension_eh(x);
    return SpherePoint3{w.w0, std::conj(w.w1)};
  });
  CHECK(hemisphere_preservation(mesh, flipped) < -0.5);
}

TEST_CASE("projection stats") {
  const auto stats = projection_stats(mesh_s4(17, 16));
  CHECK(stats.min_norm >= 1.0 - 1e-13);
  CHECK(stats.max_det_c_deviation <= 1e-12);
  CHECK(stats.min_abs_det_c > 0.99);
}

TEST_CASE("certificates") {
  const SphereMesh4 coarse = mesh_s4(17, 16);
  CertifyOptions opts;
  opts.sabotage = CertifyOptions::Sabotage::FLIP_F;
  try {
    build_certificates(coarse, opts);
    FAIL("sabotaged f must not certify");
  } catch (const CertificateFailure& e) {
    CHECK(e.evidence() == "equator_residual");
  }

  opts.sabotage = CertifyOptions::Sabotage::FIBER;
  const auto ev = collect_evidence(coarse, opts);
  const auto linking = std::find_if(ev.one_minus_2ab.begin(), ev.one_minus_2ab.end(),
                                    [](const auto& b) { return b.name == "hopf_linking_abs"; });
  REQUIRE(linking != ev.one_minus_2ab.end());
  CHECK_FALSE(linking->pass());

  // the ba path is exact pointwise, so two t values suffice
  opts = {};
  opts.t_count = 2;
  for (const auto& b : collect_evidence(coarse, opts).one_minus_2ba) CHECK(b.pass());

  CHECK_FALSE(EvidenceBound{"nan", std::nan(""), Comparator::LE, 1.0}.pass());
  CHECK(EvidenceBound{"eq", 1.0, Comparator::EQ, 1.0}.pass());
}

TEST_CASE("certificates at the default mesh") {
  const CertificatePair pair = build_certificates(mesh_s4(65, 64));
  CHECK(pair.one_minus_2ba.verdict == Verdict::NULL_HOMOTOPIC);
  CHECK(pair.one_minus_2ba.assumptions.empty());
  CHECK(pair.one_minus_2ab.verdict == Verdict::OBSTRUCTED_MODULO_SUSPENSION);
  REQUIRE(pair.one_minus_2ab.assumptions.size() == 1);
  CHECK(pair.one_minus_2ab.assumptions[0].find("Freudenthal") != std::string::npos);

  const auto j = to_json(pair.one_minus_2ab);
  CHECK(j["subject"] == "ONE_MINUS_2AB");
  CHECK(j["verdict"] == "OBSTRUCTED_MODULO_SUSPENSION");
  CHECK(j["evidence"].contains("antipodal_certified_lower_bound"));
  CHECK(j["assumptions"].size() == 1);
}
