// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "vortexatlas/kite.hpp"

using namespace vortex;
using namespace vortex::kite;

namespace {

const double s3 = std::sqrt(3.0);

bool near(double a, double b, double tol = 1e-6) {
  return std::fabs(a - b) < tol;
}

int count_class(const std::vector<KiteSolution>& sols, KiteClass cls) {
  int n = 0;
  for (const auto& s : sols)
    if (s.cls == cls && s.certificate.pass) ++n;
  return n;
}

int concave_beyond_barycenter(const std::vector<KiteSolution>& sols) {
  int n = 0;
  for (const auto& s : sols) {
    if (!s.certificate.pass) continue;
    if (s.cls == KiteClass::ConcaveInterior ||
        s.cls == KiteClass::ConcaveExterior ||
        s.cls == KiteClass::EquilateralExterior)
      ++n;
  }
  return n;
}

// convex-hull check: is any vortex strictly inside the others' triangle?
bool hull_concave(const Config& cfg, int* inside_index = nullptr) {
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> rest;
    int c = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) rest[c++] = j;
    double s1 = (cfg.z[rest[1]] - cfg.z[rest[0]]).cross(cfg.z[i] - cfg.z[rest[0]]);
    double s2 = (cfg.z[rest[2]] - cfg.z[rest[1]]).cross(cfg.z[i] - cfg.z[rest[1]]);
    double s3c = (cfg.z[rest[0]] - cfg.z[rest[2]]).cross(cfg.z[i] - cfg.z[rest[2]]);
    if ((s1 > 1e-9 && s2 > 1e-9 && s3c > 1e-9) ||
        (s1 < -1e-9 && s2 < -1e-9 && s3c < -1e-9)) {
      if (inside_index) *inside_index = i;
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("reduced condition vanishes at the known shapes") {
  CHECK(std::fabs(f_value(1, 1)) < 1e-15);                    // square
  CHECK(std::fabs(f_value(s3, -1 / s3)) < 1e-15);             // barycenter
  CHECK(std::fabs(f_value(s3, 1.19175)) < 1e-4);              // near P1
  CHECK_THROWS(f_value(1, -1));
}

TEST_CASE("strength ratio closed form") {
  auto g_sq = gamma4_of(1, 1);
  REQUIRE(g_sq.has_value());
  CHECK(*g_sq == doctest::Approx(1.0));

  auto g_zero = gamma4_of(s3, 0.8);
  REQUIRE(g_zero.has_value());
  CHECK(std::fabs(*g_zero) < 1e-14);  // factor 3 - k^2 vanishes

  // pole curve l = (1-k^2)/(2k)
  CHECK(!gamma4_of(0.5, (1 - 0.25) / 1.0).has_value());
  CHECK(on_pole_curve(std::sqrt(2.0) - 1, 1.0));

  // limit along the curve into the barycenter point is the equal-strength
  // value (sampled just off the base point on the curve)
  // sign identity: sign(gamma4) = sign(k(3-k^2)/(k^2+2kl-1))
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  int checked = 0;
  while (checked < 200) {
    double k = u(rng), l = u(rng);
    if (k + l < 0.05 || std::fabs(k) < 0.05 || std::fabs(l) < 0.05) continue;
    if (on_pole_curve(k, l, 1e-3)) continue;
    auto g = gamma4_of(k, l);
    if (!g) continue;
    ++checked;
    double rhs = k * (3 - k * k) / (k * k + 2 * k * l - 1);
    CHECK(((*g > 0) == (rhs > 0) || std::fabs(*g) < 1e-12));
  }
}

TEST_CASE("landmarks reproduce the printed decimals and closed forms") {
  std::map<std::string, Landmark> by_name;
  for (const auto& lm : landmarks()) by_name[lm.name] = lm;
  REQUIRE(by_name.size() == 7);

  CHECK(std::fabs(by_name["P1"].k - s3) < 1e-12);
  CHECK(by_name["P1"].l == doctest::Approx(1.19175).epsilon(5e-6));
  CHECK(by_name["P3"].l == doctest::Approx(2.74748).epsilon(5e-6));
  CHECK(std::fabs(by_name["P3"].k + s3) < 1e-12);
  CHECK(by_name["P4"].l == doctest::Approx(1.2072).epsilon(5e-5));
  CHECK(std::fabs(by_name["P4"].k) < 1e-12);
  CHECK(by_name["P5"].l == doctest::Approx(-0.17633).epsilon(5e-5));
  CHECK(std::fabs(by_name["P2"].k - (std::sqrt(2.0) - 1)) < 1e-12);
  CHECK(std::fabs(by_name["P2"].l - 1.0) < 1e-12);
  CHECK(std::fabs(by_name["P7"].k - (1 + std::sqrt(2.0))) < 1e-12);
  CHECK(std::fabs(by_name["P7"].l + 1.0) < 1e-12);
  CHECK(std::fabs(by_name["P6"].k - s3) < 1e-12);
  CHECK(std::fabs(by_name["P6"].l + 1 / s3) < 1e-12);

  // every landmark lies on the curve (or its closure for P4)
  for (const auto& [name, lm] : by_name) {
    if (name == "P4") continue;
    CHECK(std::fabs(curve_polynomial().eval_double(lm.k, lm.l)) < 1e-9);
  }
}

TEST_CASE("curve tracing stays on the curve and spans the window") {
  auto arc = trace_curve({1.0, 1.0}, 1e-2, -3, 3, -3, 3);
  CHECK(arc.samples.size() > 100);
  double kmin = 1e9, kmax = -1e9;
  for (const auto& p : arc.samples) {
    CHECK(std::fabs(f_value(p.k, p.l)) < 1e-9);
    kmin = std::min(kmin, p.k);
    kmax = std::max(kmax, p.k);
  }
  // the upper branch passes the P4 and P1 neighborhoods inside the window
  CHECK(kmin < -1.0);
  CHECK(kmax > 2.0);

  // fourth-quadrant branch from a seed near P5
  auto low = trace_curve({s3, -0.17633}, 1e-2, -3, 3, -3, 3);
  CHECK(low.samples.size() > 50);
  for (const auto& p : low.samples) CHECK(p.l < 0.2);

  CHECK_THROWS(trace_curve({2.0, 2.0}, 1e-2, -3, 3, -3, 3));  // off-curve seed
}

TEST_CASE("solution censuses per strength") {
  auto at_half = solve_kite(0.5, 1e-12);
  CHECK(count_class(at_half, KiteClass::Convex) == 1);
  CHECK(count_class(at_half, KiteClass::ConcaveExterior) == 2);
  CHECK(count_class(at_half, KiteClass::ConcaveInterior) == 1);
  CHECK(count_class(at_half, KiteClass::EquilateralInterior) == 1);
  CHECK(concave_beyond_barycenter(at_half) == 3);

  auto at_one = solve_kite(1.0, 1e-12);
  CHECK(count_class(at_one, KiteClass::Square) == 1);
  CHECK(count_class(at_one, KiteClass::EquilateralExterior) == 1);
  CHECK(count_class(at_one, KiteClass::EquilateralInterior) == 1);
  CHECK(concave_beyond_barycenter(at_one) == 1);

  auto at_two = solve_kite(2.0, 1e-12);
  CHECK(count_class(at_two, KiteClass::Convex) == 1);
  CHECK(concave_beyond_barycenter(at_two) == 1);

  auto at_neg = solve_kite(-0.25, 1e-12);
  CHECK(count_class(at_neg, KiteClass::Convex) == 1);
  CHECK(concave_beyond_barycenter(at_neg) == 1);

  auto at_zero = solve_kite(0.0, 1e-12);
  CHECK(concave_beyond_barycenter(at_zero) == 2);
}

TEST_CASE("every solution satisfies the full mutual-distance system") {
  for (double g : {0.5, 2.0, -0.25}) {
    for (const auto& s : solve_kite(g, 1e-12)) {
      CHECK(s.certificate.pass);
      CHECK(std::fabs(f_value(s.point.k, s.point.l)) < 1e-10);
      if (!near(s.point.k, s3) || !near(s.point.l, -1 / s3)) {
        auto got = gamma4_of(s.point.k, s.point.l);
        REQUIRE(got.has_value());
        CHECK(std::fabs(*got - g) < 1e-10 * (1 + std::fabs(g)));
      }
      // the full product chain holds, not only the reduced pair
      CHECK(s.certificate.residual_dziobek < 1e-9);
      CHECK(s.certificate.residual_condition10 < 1e-9);
    }
  }
}

TEST_CASE("classification agrees with the convex hull") {
  for (double g : {0.5, 1.0, 2.0, -0.25}) {
    for (const auto& s : solve_kite(g, 1e-12)) {
      Config cfg = embed(s.point, g);
      int inside = -1;
      bool concave = hull_concave(cfg, &inside);
      switch (s.cls) {
        case KiteClass::Convex:
        case KiteClass::Square:
          CHECK(!concave);
          break;
        case KiteClass::ConcaveInterior:
        case KiteClass::EquilateralInterior:
          CHECK(concave);
          CHECK(inside == 3);  // the free vortex is the interior one
          break;
        case KiteClass::ConcaveExterior:
        case KiteClass::EquilateralExterior:
          CHECK(concave);
          CHECK(inside == 2);  // a unit vortex is interior
          break;
      }
    }
  }
}

TEST_CASE("chart is scale-normalized") {
  // rescaling an embedded solution and re-deriving the chart coordinates
  // returns the same point
  auto sols = solve_kite(0.5, 1e-12);
  REQUIRE(!sols.empty());
  const auto& s = sols.front();
  Config cfg = embed(s.point, 0.5);
  double scale = 3.7;
  for (auto& z : cfg.z) z = z * scale;
  // chart: unit vortices back at (+-1, 0)
  double unit = std::fabs(cfg.z[0].x);
  CHECK(std::fabs(-cfg.z[2].y / unit - s.point.k) < 1e-12);
  CHECK(std::fabs(cfg.z[3].y / unit - s.point.l) < 1e-12);
}

TEST_CASE("strength-zero case from the rate equations") {
  auto sols = solve_kite_gamma4_zero(1e-12);
  REQUIRE(sols.size() == 4);
  // the four known solutions, ordered by l
  CHECK(sols[0].point.l == doctest::Approx(-1 / s3).epsilon(1e-10));
  CHECK(sols[1].point.l == doctest::Approx(-0.176327).epsilon(1e-5));
  CHECK(sols[2].point.l == doctest::Approx(1.19175).epsilon(1e-5));
  CHECK(sols[3].point.l == doctest::Approx(2.74748).epsilon(1e-5));
  CHECK(std::fabs(sols[3].point.k + s3) < 1e-9);
  for (const auto& s : sols) CHECK(s.certificate.pass);
}

TEST_CASE("exterior-arc solution count flips only at the critical strength") {
  std::map<double, int> expect = {{0.5, 2}, {0.9, 2}, {1.1, 0}, {2.0, 0}};
  for (auto [g, want] : expect) {
    int exterior = 0;
    for (const auto& s : solve_kite(g, 1e-12))
      if (s.cls == KiteClass::ConcaveExterior && s.certificate.pass) ++exterior;
    CHECK(exterior == want);
  }
}

TEST_CASE("critical point analysis") {
  auto rep = critical_points();
  CHECK(rep.h1_verified_on_curve);
  CHECK(rep.factorization_matches);
  CHECK(rep.r_matches_published);
  CHECK(rep.r_real_roots == 0);
  CHECK(rep.resultant_real_roots_nonzero_l == 4);
  CHECK(rep.roots_are_pm_sqrt3_and_pm_inv_sqrt3);
  REQUIRE(rep.critical.size() == 1);
  CHECK(std::fabs(rep.critical[0].first.k + 1 / s3) < 1e-10);
  CHECK(std::fabs(rep.critical[0].first.l - s3) < 1e-10);
  CHECK(std::fabs(rep.critical[0].second - 1.0) < 1e-10);

  // published degree-20 factor: value at l = 1 is the coefficient sum
  CHECK(rep.r_factor.eval(rat(1)) == rat(2048));
}

TEST_CASE("extended scan finds the tail families the arcs omit") {
  auto sols = solve_kite(-0.25, 1e-12, true);
  int convex = 0, exterior = 0;
  for (const auto& s : sols) {
    if (!s.certificate.pass) continue;
    if (s.cls == KiteClass::Convex && s.arc == "gamma1-tail") ++convex;
    if (s.cls == KiteClass::ConcaveExterior && s.arc == "gamma3-tail") ++exterior;
  }
  CHECK(convex == 1);
  CHECK(exterior == 1);
}
