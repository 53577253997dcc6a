// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <array>
#include <algorithm>

#include "vortexatlas/collinear.hpp"

using namespace vortex;
using namespace vortex::collinear;

TEST_CASE("eliminant table spot values") {
  // constant term at gamma4 = 0 and leading coefficient at gamma4 = 1
  CHECK(asymmetric_polynomial(rat(0)).eval(rat(0)) == rat(-1148));
  CHECK(asymmetric_polynomial(rat(1)).leading() == rat(108));
  CHECK(asymmetric_polynomial(rat(1)).degree() == 12);
  // degree drops where the leading line vanishes
  CHECK(asymmetric_polynomial(rat(-1, 2)).degree() == 10);
}

TEST_CASE("published table differs only in the x^6 line") {
  auto diffs = table_discrepancies();
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].x_power == 6);
  // the corrected line at gamma = 0 is the negative of the published one
  CHECK(diffs[0].published_line.eval(rat(0)) == rat(62688));
  CHECK(diffs[0].derived_line.eval(rat(0)) == rat(-62688));
}

TEST_CASE("exact censuses across the strength line") {
  CHECK(census(rat(-3, 4)).root_count == 6);
  CHECK(census(rat(-1, 2)).root_count == 7);
  CHECK(census(rat(1, 2)).root_count == 12);
  CHECK(census(rat(2)).root_count == 12);
  CHECK(census(rat(-2)).root_count == 0);
  CHECK(census(rat(0)).root_count == 12);
}

TEST_CASE("census is locally constant away from bifurcations") {
  for (const Rational& g : {rat(-1, 4), rat(1, 2), rat(3, 2)}) {
    int at = census(g).root_count;
    CHECK(census(g - rat(1, 1000)).root_count == at);
    CHECK(census(g + rat(1, 1000)).root_count == at);
  }
}

TEST_CASE("symmetric family at equal strengths") {
  auto sols = symmetric_solutions(rat(1));
  REQUIRE(sols.size() == 4);
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  // x2 values are +-(sqrt3 +- sqrt2)
  CHECK(std::fabs(sols[3].x2 - (s3 + s2)) < 1e-12);
  CHECK(std::fabs(sols[2].x2 - (s3 - s2)) < 1e-12);
  CHECK(std::fabs(sols[1].x2 + (s3 - s2)) < 1e-12);
  CHECK(std::fabs(sols[0].x2 + (s3 + s2)) < 1e-12);
  for (const auto& s : sols) {
    CHECK(s.x1 == doctest::Approx(-s.x2).epsilon(1e-14));
    CHECK(s.certificate.pass);
    double y = s.x2 * s.x2;
    // x2^2 solves y^2 - 10 y + 1 = 0
    CHECK(std::fabs(y * y - 10 * y + 1) < 1e-12);
    // the rotation rate satisfies the reduced relation
    // (2 lambda - 1) x2^2 = 2 lambda - 5
    CHECK(std::fabs((2 * s.lambda - 1) * y - (2 * s.lambda - 5)) < 1e-12);
    CHECK(std::fabs(s.lambda - (y - 5) / (2 * (y - 1))) < 1e-12);
  }
  CHECK(symmetric_solutions(rat(1, 2)).empty());
}

TEST_CASE("symmetric roots are contained in the eliminant at strength 1") {
  auto c = census(rat(1));
  CHECK(c.symmetric_count == 4);
  CHECK(c.symmetric_contained);
}

TEST_CASE("full solve produces certified labeled solutions") {
  auto sols = solve(rat(1, 2), rat(1, Integer("1000000000000")));
  CHECK(sols.size() == 12);
  for (const auto& s : sols) {
    CHECK(s.certificate.pass);
    CHECK(s.certificate.collinear);
    // cleared residual of the rate equations
    double worst = 0;
    double xs[4] = {s.x1, s.x2, -1, 1};
    double gs[4] = {1, 1, 1, s.gamma4};
    for (int i = 0; i < 4; ++i) {
      double rhs = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) rhs += gs[j] / (xs[i] - xs[j]);
      worst = std::max(worst, std::fabs(s.lambda * (xs[i] - s.c) - rhs));
    }
    CHECK(worst < 1e-10 * (1 + std::fabs(s.lambda)));
  }

  auto six = solve(rat(-3, 4), rat(1, Integer("1000000000000")));
  CHECK(six.size() == 6);
  for (const auto& s : six) CHECK(s.certificate.pass);
}

TEST_CASE("the twelve labeled solutions close under the unit-pair swap") {
  // swapping the two free unit labels maps solutions to solutions, so the
  // twelve roots come as six (x1, x2) <-> (x2, x1) pairs
  auto sols = solve(rat(1, 2), rat(1, Integer("1000000000000")));
  REQUIRE(sols.size() == 12);
  int paired = 0;
  for (const auto& a : sols)
    for (const auto& b : sols)
      if (std::fabs(a.x1 - b.x2) < 1e-9 && std::fabs(a.x2 - b.x1) < 1e-9)
        ++paired;
  CHECK(paired == 12);  // every solution has exactly one swap partner
}

TEST_CASE("a solution rotated by half a turn is still a solution") {
  auto sols = solve(rat(1, 2), rat(1, Integer("1000000000000")));
  REQUIRE(!sols.empty());
  const auto& s = sols.front();
  Config cfg;
  cfg.z = {Vec2{-s.x1, 0}, Vec2{-s.x2, 0}, Vec2{1, 0}, Vec2{-1, 0}};
  cfg.gamma = {1, 1, 1, s.gamma4};
  CHECK(certify(cfg, 1e-8).pass);
}

TEST_CASE("refined leftmost root matches a double-precision oracle") {
  Rational g = rat(1, 2);
  Poly p = asymmetric_polynomial(g);
  auto ivs = isolate_roots(p);
  REQUIRE(ivs.size() == 12);
  auto fine = refine_root(p, ivs.front(), rat(1, Integer("1000000000000")));
  // independent double bisection on the same polynomial
  auto pd = to_double_coeffs(p);
  double lo = fine.lo.get_d() - 0.25, hi = fine.lo.get_d() + 0.25;
  double flo = eval_double_coeffs(pd, lo);
  REQUIRE(flo * eval_double_coeffs(pd, hi) < 0);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = eval_double_coeffs(pd, mid);
    if (fm == 0) { lo = hi = mid; break; }
    if (flo * fm < 0)
      hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  CHECK(std::fabs(fine.midpoint_double() - 0.5 * (lo + hi)) < 1e-9);
}

TEST_CASE("bifurcation brackets") {
  auto in_neg = bifurcation_values(rat(-1), rat(0), 8);
  bool found_half = false;
  for (const auto& b : in_neg) {
    if (b.lo < rat(-1, 2) && !(b.hi < rat(-1, 2))) {
      found_half = true;
      CHECK(b.certified);
    }
  }
  CHECK(found_half);

  CHECK(bifurcation_values(rat(-2), rat(-1), 6).empty());
  CHECK(bifurcation_values(rat(1, 10), rat(9, 10), 6).empty());
}

TEST_CASE("independent elimination agrees with the hardcoded table") {
  auto report = elimination_crosscheck({rat(0), rat(1, 2), rat(2)});
  CHECK(report.ok);
  REQUIRE(report.samples.size() == 3);
  for (const auto& s : report.samples) {
    CHECK(s.root_sets_match);
    CHECK(s.hardcoded_roots == s.eliminated_roots);
  }
  CHECK(report.published_table_diffs.size() == 1);  // the x^6 transcription slip
}

TEST_CASE("crosscheck with enough samples validates the whole table") {
  std::vector<Rational> samples;
  for (int i = 0; i <= 14; ++i) samples.push_back(rat(i - 4, 3));
  auto report = elimination_crosscheck(samples);
  CHECK(report.ok);
}
