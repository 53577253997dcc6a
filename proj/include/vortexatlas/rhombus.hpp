// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// One-parameter rhombus families: vortices 1 and 2 with unit strength on
// one diagonal, vortex 3 (unit) and the free vortex on the other.  The
// diagonal ratio is a closed form in the free strength; embeddings are
// certified against the velocity field, and the exact mutual-distance
// identities are checked in rational arithmetic for rational strengths.

#ifndef VORTEXATLAS_RHOMBUS_HPP
#define VORTEXATLAS_RHOMBUS_HPP

#include <optional>
#include <vector>

#include "vortexatlas/vortexcore.hpp"

namespace vortex::rhombus {

// Free strength from the diagonal ratio x = r34/r12:
// (x^2 - 3)/(1 - 3 x^2).  Pole at x = 1/sqrt(3).
double gamma4_of_ratio(double x);

// Inverse: x^2 = (g + 3)/(3 g + 1); nullopt when no real rhombus exists
// (x^2 <= 0), throws on the pole g = -1/3.
std::optional<double> ratio_squared_of_gamma4(double gamma4);

// lambda * r12^2 = -3 (1 + gamma4).
double angular_velocity_scaled(double gamma4);

enum class FamilyBranch { A, B };  // A: gamma4 > -1/3, B: gamma4 < -3

struct Family {
  double gamma4 = 0;
  double x_squared = 0;       // (r34/r12)^2
  double side_ratio_sq = 0;   // (r13/r12)^2 = (gamma4+1)/(3 gamma4+1)
  double lambda_scaled = 0;   // lambda * r12^2
  FamilyBranch branch = FamilyBranch::A;
  bool admissible = false;
  Config embedding;           // r12 = 2, diagonals on the axes
  Certificate certificate;    // velocity-field certification of the embedding
};

std::vector<Family> enumerate_families(double gamma4);

// Exact rational checks at a rational strength (empty when no rhombus):
struct ExactChecks {
  bool admissible = false;
  bool dziobek_chain_holds = false;   // product chain with eliminated multiplier
  bool lambda_identity_holds = false; // -L/(2I) * r12^2 == -3 (1 + gamma4)
  bool area_convention_holds = false; // A1 = A2 = -A3 = -A4 pattern
  Rational x_squared;
};

ExactChecks exact_checks(const Rational& gamma4);

}  // namespace vortex::rhombus

#endif
