// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// Special regimes: absolute equilibria (which require the pair sum L to
// vanish) and rigidly translating configurations (which require the total
// vorticity to vanish), plus the weighted-distance system used for
// relative equilibria in the zero-total-vorticity regime.

#ifndef VORTEXATLAS_SPECIAL_HPP
#define VORTEXATLAS_SPECIAL_HPP

#include <array>
#include <vector>

#include "vortexatlas/vortexcore.hpp"

namespace vortex::special {

struct SpecialCaseResult {
  enum class Kind { AbsoluteEquilibrium, RigidTranslation };
  Kind kind = Kind::AbsoluteEquilibrium;
  std::vector<Config> configurations;
  std::vector<Vec2> translation_velocities;  // per configuration, when rigid
  std::vector<Certificate> certificates;
};

// Closed-form absolute equilibria with z3 = (1,0), z4 = (0,0); requires
// L = sum of pairwise strength products to vanish.
SpecialCaseResult absolute_equilibria(const std::array<double, 4>& gammas);

// Residuals of the zero-total-vorticity relative equilibrium system:
// equality of the strength-weighted squared-distance sums S_i = s0 and the
// reciprocal-sum chain over opposite pairs, denominators cleared.
template <class S>
std::array<S, 6> eq17_residuals(const DistanceState<S>& st,
                                const std::array<S, 4>& gammas, const S& s0) {
  // S_i = sum_{j != i} gamma_j rho_ij
  std::array<S, 6> out{};
  std::array<std::array<S, 4>, 4> rho{};
  for (int p = 0; p < 6; ++p) {
    auto [i, j] = kPairs[p];
    rho[i][j] = st.rho[p];
    rho[j][i] = st.rho[p];
  }
  for (int i = 0; i < 4; ++i) {
    S si{};
    for (int j = 0; j < 4; ++j)
      if (j != i) si += gammas[j] * rho[i][j];
    out[i] = si - s0;
  }
  // chain with cleared denominators over pairs (12,34), (13,24), (14,23)
  const S &a = st.rho[0], &f = st.rho[5];  // 12, 34
  const S &b = st.rho[1], &e = st.rho[4];  // 13, 24
  const S &c = st.rho[2], &d = st.rho[3];  // 14, 23
  out[4] = (a + f) * b * e - (b + e) * a * f;
  out[5] = (b + e) * c * d - (c + d) * b * e;
  return out;
}

// Numerically locates rigidly translating four-vortex configurations for
// strengths with zero total vorticity, z3 = (1,0), z4 = (0,0) fixed.
// Deterministic multi-start; deduplicated labeled solutions.
SpecialCaseResult rigid_translation_search(const std::array<double, 4>& gammas,
                                           double eps);

// The symmetric concave configuration of the zero-total-vorticity regime
// with the free strength inside the unit triangle (found by Newton on the
// rate equations); used to exercise the weighted-distance system.
Config concave_kite_zero_total_vorticity();

}  // namespace vortex::special

#endif
