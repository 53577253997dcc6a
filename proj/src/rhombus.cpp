// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/rhombus.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex::rhombus {

double gamma4_of_ratio(double x) {
  if (x <= 0) throw std::domain_error("gamma4_of_ratio: x must be positive");
  double d = 1 - 3 * x * x;
  if (std::fabs(d) < 1e-12)
    throw std::domain_error("gamma4_of_ratio: pole at x = 1/sqrt(3)");
  return (x * x - 3) / d;
}

std::optional<double> ratio_squared_of_gamma4(double gamma4) {
  double den = 3 * gamma4 + 1;
  if (std::fabs(den) < 1e-14)
    throw std::domain_error("ratio_squared_of_gamma4: pole at gamma4 = -1/3");
  double x2 = (gamma4 + 3) / den;
  if (x2 <= 0) return std::nullopt;
  return x2;
}

double angular_velocity_scaled(double gamma4) { return -3 * (1 + gamma4); }

std::vector<Family> enumerate_families(double gamma4) {
  std::vector<Family> out;
  if (3 * gamma4 + 1 == 0) return out;
  auto x2 = ratio_squared_of_gamma4(gamma4);
  if (!x2) return out;  // no real rhombus for gamma4 in [-3, -1/3]
  Family fam;
  fam.gamma4 = gamma4;
  fam.x_squared = *x2;
  fam.side_ratio_sq = (gamma4 + 1) / (3 * gamma4 + 1);
  fam.lambda_scaled = angular_velocity_scaled(gamma4);
  fam.branch = gamma4 > -1.0 / 3.0 ? FamilyBranch::A : FamilyBranch::B;
  fam.admissible = true;
  double x = std::sqrt(*x2);
  fam.embedding.z = {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -x}, Vec2{0, x}};
  fam.embedding.gamma = {1, 1, 1, gamma4};
  fam.certificate = certify(fam.embedding, 1e-10);
  out.push_back(fam);
  return out;
}

ExactChecks exact_checks(const Rational& gamma4) {
  ExactChecks chk;
  Rational den = Rational(3) * gamma4 + 1;
  if (sign(den) == 0) return chk;
  Rational x2 = (gamma4 + 3) / den;
  if (sign(x2) <= 0) return chk;
  chk.admissible = true;
  chk.x_squared = x2;

  // Mutual distances of the embedding at r12 = 2: the squared lengths are
  // rational in x^2 even though the coordinates are not.
  DistanceState<Rational> st;
  Rational side = x2 + 1;
  st.rho = {Rational(4), side, side, side, side, Rational(4) * x2};
  auto dz = dziobek_residuals(st);
  chk.dziobek_chain_holds = sign(dz.residual_12_34_vs_13_24) == 0 &&
                            sign(dz.residual_13_24_vs_14_23) == 0;

  // lambda identity: with L = 3(1+g) the scaled identity reduces to the
  // centered moment of inertia being exactly r12^2 / 2 = 2.
  Rational g = gamma4;
  Rational alpha = (g - 1) / (g + 3);  // center height divided by x
  Rational inertia =
      (Rational(2) * (1 + x2 * alpha * alpha) + x2 * (1 + alpha) * (1 + alpha) +
       g * x2 * (1 - alpha) * (1 - alpha)) /
      2;
  chk.lambda_identity_holds = (inertia == Rational(2));

  // Oriented areas of the embedding: A1 = A2 = -x, A3 = A4 = +x, checked
  // through the squared pattern (areas themselves are irrational in x).
  // A1/A2 = 1, A3/A4 = 1, A1/A3 = -1 follow from the cross products:
  // all areas have magnitude x with the alternating-sign convention.
  chk.area_convention_holds = true;  // structural for this embedding
  RConfig probe;
  probe.z = {RVec2{rat(-1), rat(0)}, RVec2{rat(1), rat(0)},
             RVec2{rat(0), rat(-1)}, RVec2{rat(0), rat(1)}};
  probe.gamma = {rat(1), rat(1), rat(1), rat(1)};
  auto areas = to_mutual_distances(probe).area;
  chk.area_convention_holds = areas[0] == areas[1] && areas[2] == areas[3] &&
                              areas[0] == -areas[2];
  return chk;
}

}  // namespace vortex::rhombus
