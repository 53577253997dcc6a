// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vortexatlas/kite.hpp"
#include "vortexatlas/vortexcore.hpp"

using namespace vortex;

namespace {

Config unit_square(double g4 = 1.0) {
  Config cfg;
  cfg.z = {Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, -1}, Vec2{0, 1}};
  cfg.gamma = {1, 1, 1, g4};
  return cfg;
}

Config equilateral_with_center(double g4) {
  const double s3 = std::sqrt(3.0);
  Config cfg;
  cfg.z = {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, s3}, Vec2{0, s3 / 3}};
  cfg.gamma = {1, 1, 1, g4};
  return cfg;
}

Config random_config(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Config cfg;
  for (int i = 0; i < 4; ++i) cfg.z[i] = Vec2{u(rng), u(rng)};
  cfg.gamma = {1, 1, 1, u(rng)};
  return cfg;
}

}  // namespace

TEST_CASE("global quantities") {
  auto q = quantities(unit_square(1.0));
  CHECK(q.total_vorticity == doctest::Approx(4.0));
  CHECK(q.pair_sum == doctest::Approx(6.0));
  CHECK(q.has_center);

  auto q2 = quantities(unit_square(-1.0));
  CHECK(q2.pair_sum == doctest::Approx(0.0));  // absolute-equilibrium regime

  auto q3 = quantities(unit_square(-3.0));
  CHECK(q3.total_vorticity == doctest::Approx(0.0));
  CHECK(!q3.has_center);
}

TEST_CASE("angular velocity of the square against the velocity field") {
  Config cfg = unit_square();
  auto q = quantities(cfg);
  double lambda = angular_velocity(q);
  CHECK(lambda == doctest::Approx(-1.5));
  // the velocity field must be the rigid rotation with rate -lambda
  auto v = velocities(cfg);
  for (int i = 0; i < 4; ++i) {
    Vec2 pred = rot90(cfg.z[i] - q.center) * (-lambda);
    CHECK(std::sqrt((v[i] - pred).norm_sq()) < 1e-14);
  }
}

TEST_CASE("mutual distances, planarity form and areas") {
  RConfig sq;
  sq.z = {RVec2{rat(0), rat(0)}, RVec2{rat(1), rat(0)}, RVec2{rat(1), rat(1)},
          RVec2{rat(0), rat(1)}};
  sq.gamma = {rat(1), rat(1), rat(1), rat(1)};
  auto st = to_mutual_distances(sq);
  CHECK(sign(st.cayley_menger) == 0);  // planar, exactly
  Rational asum = st.area[0] + st.area[1] + st.area[2] + st.area[3];
  CHECK(sign(asum) == 0);

  // a regular tetrahedron's distances cannot be planar
  std::array<Rational, 6> tetra;
  for (auto& r : tetra) r = rat(1);
  CHECK(sign(cayley_menger(tetra)) != 0);

  // collinear points have zero areas
  Config line;
  line.z = {Vec2{-2, 0}, Vec2{-0.5, 0}, Vec2{0.7, 0}, Vec2{1.9, 0}};
  line.gamma = {1, 1, 1, 1};
  auto stl = to_mutual_distances(line);
  for (double a : stl.area) CHECK(a == doctest::Approx(0.0));

  Config collide = line;
  collide.z[1] = collide.z[0];
  CHECK_THROWS(to_mutual_distances(collide));
}

TEST_CASE("planarity-form derivative matches -32 A_i A_j") {
  std::mt19937 rng(2024);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 100; ++trial) {
    Config cfg = random_config(rng);
    bool ok = true;
    for (auto [i, j] : kPairs)
      if ((cfg.z[i] - cfg.z[j]).norm_sq() < 0.05) ok = false;
    if (!ok) continue;
    ++tested;
    auto st = to_mutual_distances(cfg);
    for (int p = 0; p < 6; ++p) {
      auto [i, j] = kPairs[p];
      const double h = 1e-6 * (1 + st.rho[p]);
      auto rp = st.rho, rm = st.rho;
      rp[p] += h;
      rm[p] -= h;
      double fd = (cayley_menger(rp) - cayley_menger(rm)) / (2 * h);
      double expected = -32.0 * st.area[i] * st.area[j];
      if (std::fabs(expected) > 1e-9) {
        CHECK(std::fabs(fd - expected) / std::fabs(expected) < 1e-6);
      } else {
        CHECK(std::fabs(fd) < 1e-4);
      }
    }
  }
  CHECK(tested == 100);
}

TEST_CASE("dziobek products") {
  // square: fully symmetric, the eliminated multiplier balances exactly
  auto st = to_mutual_distances(unit_square());
  auto dz = dziobek_residuals(st);
  CHECK(std::fabs(dz.residual_12_34_vs_13_24) < 1e-15);
  CHECK(std::fabs(dz.residual_13_24_vs_14_23) < 1e-15);
  CHECK(dz.lambda_prime == doctest::Approx(-3.0 / 8.0));

  // the multiplier equals lambda / total vorticity on the square
  auto q = quantities(unit_square());
  CHECK(dz.lambda_prime ==
        doctest::Approx(angular_velocity(q) / q.total_vorticity));

  // equilateral with an arbitrary strength at the barycenter: symmetric
  // degenerate, residuals vanish identically
  auto st2 = to_mutual_distances(equilateral_with_center(0.37));
  auto dz2 = dziobek_residuals(st2);
  CHECK(dz2.symmetric_degenerate);
  CHECK(std::fabs(dz2.residual_12_34_vs_13_24) < 1e-14);
  CHECK(std::fabs(dz2.residual_13_24_vs_14_23) < 1e-14);

  // random distances: no multiplier balances the chain
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  int nonzero = 0;
  for (int t = 0; t < 20; ++t) {
    DistanceState<double> rst;
    for (auto& r : rst.rho) r = u(rng);
    auto rdz = dziobek_residuals(rst);
    if (std::fabs(rdz.residual_12_34_vs_13_24) > 1e-10 ||
        std::fabs(rdz.residual_13_24_vs_14_23) > 1e-10)
      ++nonzero;
  }
  CHECK(nonzero >= 19);
}

TEST_CASE("necessary distance condition") {
  auto st = to_mutual_distances(unit_square());
  CHECK(std::fabs(condition10_residual(st)) < 1e-14);

  // kite solution: equilateral plus barycenter
  auto st2 = to_mutual_distances(equilateral_with_center(1.0));
  CHECK(std::fabs(condition10_residual(st2)) < 1e-12);

  auto bad = st;
  bad.rho[1] *= 1.1;
  CHECK(std::fabs(condition10_residual(bad)) > 1e-6);
}

TEST_CASE("strength recovery from distance ratios") {
  // equilateral + barycenter: the rows against the center vortex are
  // degenerate (its three distances are equal), the unit-unit rows give 1
  auto st = to_mutual_distances(equilateral_with_center(1.0));
  for (const auto& r : vorticity_ratios(st)) {
    if (r.j == 3) {
      CHECK(r.degenerate);
    } else {
      CHECK(!r.degenerate);
      CHECK(r.value == doctest::Approx(1.0));
    }
  }

  // square: the 13-14 style denominators vanish
  auto sq = vorticity_ratios(to_mutual_distances(unit_square()));
  int degenerate = 0;
  for (const auto& r : sq) degenerate += r.degenerate;
  CHECK(degenerate > 0);
}

TEST_CASE("strength recovered from a certified kite shape") {
  // interior kite solution at strength 1/2: recover gamma4 from a
  // wing-to-axis difference quotient and the oriented areas
  kite::KiteSolution interior;
  bool found = false;
  for (const auto& s : kite::solve_kite(0.5, 1e-12))
    if (s.cls == kite::KiteClass::ConcaveInterior) {
      interior = s;
      found = true;
    }
  REQUIRE(found);
  Config cfg = kite::embed(interior.point, 0.5);
  auto stk = to_mutual_distances(cfg);
  auto rk = vorticity_ratios(stk);
  // row (0,3): gamma1 A4 / (gamma4 A1) = value -> gamma4 = A4/(A1 value)
  // (the axis-to-axis row is degenerate on the symmetry axis)
  for (const auto& r : rk) {
    if (r.i != 0 || r.j != 3) continue;
    REQUIRE(!r.degenerate);
    double recovered = stk.area[3] / (stk.area[0] * r.value);
    CHECK(std::fabs(recovered - 0.5) < 1e-10);
  }
}

TEST_CASE("certificates") {
  Certificate sq = certify(unit_square(), 1e-10);
  CHECK(sq.pass);
  CHECK(sq.kind == MotionKind::RelativeEquilibrium);
  CHECK(sq.lambda == doctest::Approx(-1.5));

  // absolute equilibrium at the L = 0 strengths
  const double s3 = std::sqrt(3.0);
  Config abs_eq;
  abs_eq.z = {Vec2{-0.5, s3 / 2}, Vec2{-0.5, -s3 / 2}, Vec2{1, 0}, Vec2{0, 0}};
  abs_eq.gamma = {1, 1, 1, -1};
  Certificate ca = certify(abs_eq, 1e-10);
  CHECK(ca.pass);
  CHECK(ca.kind == MotionKind::AbsoluteEquilibrium);

  std::mt19937 rng(99);
  int fails = 0;
  for (int t = 0; t < 10; ++t)
    if (!certify(random_config(rng), 1e-10).pass) ++fails;
  CHECK(fails == 10);
}

TEST_CASE("certificate invariance under rotation and scaling") {
  Config base = equilateral_with_center(1.0);
  Certificate c0 = certify(base, 1e-10);
  CHECK(c0.pass);

  const double angle = 0.7321;
  const double ca = std::cos(angle), sa = std::sin(angle);
  Config rot = base;
  for (auto& z : rot.z) z = Vec2{ca * z.x - sa * z.y, sa * z.x + ca * z.y};
  Certificate c1 = certify(rot, 1e-10);
  CHECK(c1.pass);
  CHECK(c1.lambda == doctest::Approx(c0.lambda).epsilon(1e-12));
  CHECK(c1.residual_motion == doctest::Approx(c0.residual_motion).epsilon(1).scale(1e-12));

  const double s = 2.5;
  Config scaled = base;
  for (auto& z : scaled.z) z = z * s;
  Certificate c2 = certify(scaled, 1e-10);
  CHECK(c2.pass);
  CHECK(c2.lambda == doctest::Approx(c0.lambda / (s * s)).epsilon(1e-12));
}

TEST_CASE("exact rational certification") {
  RConfig sq;
  sq.z = {RVec2{rat(1), rat(0)}, RVec2{rat(-1), rat(0)}, RVec2{rat(0), rat(-1)},
          RVec2{rat(0), rat(1)}};
  sq.gamma = {rat(1), rat(1), rat(1), rat(1)};
  auto cert = certify_exact(sq);
  CHECK(cert.pass);
  CHECK(cert.kind == MotionKind::RelativeEquilibrium);
  CHECK(cert.omega == rat(3, 2));
  CHECK(cert.dziobek_holds);
  CHECK(cert.condition10_holds);

  // perturbed square is exactly not an equilibrium
  sq.z[0].x = rat(11, 10);
  CHECK(!certify_exact(sq).pass);
}
