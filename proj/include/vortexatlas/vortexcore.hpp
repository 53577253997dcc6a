// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// Planar four-vortex configurations: global quantities, mutual-distance
// state (squared distances, oriented areas, Cayley-Menger volume form),
// Dziobek-type residuals, and rigid-motion certification.
//
// Everything geometric is templated on the scalar so the same formulas
// run in double precision and in exact rational arithmetic.

#ifndef VORTEXATLAS_VORTEXCORE_HPP
#define VORTEXATLAS_VORTEXCORE_HPP

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>

#include "vortexatlas/rational.hpp"

namespace vortex {

namespace detail {
// Degeneracy test: exact on the rational path, relative on the float one.
template <class S>
bool negligible(const S& value, const S& scale) {
  if constexpr (std::is_same_v<S, double>) {
    return std::fabs(value) < 1e-11 * (1.0 + std::fabs(scale));
  } else {
    (void)scale;
    return sign(value) == 0;
  }
}
}  // namespace detail

template <class S>
struct Vec2T {
  S x{};
  S y{};

  Vec2T operator+(const Vec2T& o) const { return {x + o.x, y + o.y}; }
  Vec2T operator-(const Vec2T& o) const { return {x - o.x, y - o.y}; }
  Vec2T operator*(const S& s) const { return {x * s, y * s}; }
  S dot(const Vec2T& o) const { return x * o.x + y * o.y; }
  S cross(const Vec2T& o) const { return x * o.y - y * o.x; }
  S norm_sq() const { return x * x + y * y; }
};

// Counterclockwise quarter turn.
template <class S>
Vec2T<S> rot90(const Vec2T<S>& v) {
  return {S(-v.y), v.x};
}

using Vec2 = Vec2T<double>;
using RVec2 = Vec2T<Rational>;

template <class S>
struct Config4 {
  std::array<Vec2T<S>, 4> z;
  std::array<S, 4> gamma;
};

using Config = Config4<double>;
using RConfig = Config4<Rational>;

// Pair order used everywhere for the six mutual distances:
// (12, 13, 14, 23, 24, 34).
inline constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <class S>
struct Quantities {
  S total_vorticity{};       // sum of strengths
  S pair_sum{};              // L = sum over pairs of gamma_i * gamma_j
  Vec2T<S> moment{};         // M = sum gamma_i z_i
  S inertia_origin{};        // (1/2) sum gamma_i |z_i|^2
  S inertia_centered{};      // same, about the center of vorticity
  bool has_center = false;   // false when the total vorticity vanishes
  Vec2T<S> center{};
};

template <class S>
struct DistanceState {
  std::array<S, 6> rho{};    // squared mutual distances, kPairs order
  std::array<S, 4> area{};   // oriented triangle areas A_i
  S cayley_menger{};         // planarity form; zero for planar points
  std::optional<S> lambda_prime;  // multiplier, when known
};

template <class S>
Quantities<S> quantities(const Config4<S>& cfg) {
  Quantities<S> q;
  for (int i = 0; i < 4; ++i) {
    q.total_vorticity += cfg.gamma[i];
    q.moment = q.moment + cfg.z[i] * cfg.gamma[i];
    q.inertia_origin += cfg.gamma[i] * cfg.z[i].norm_sq() / S(2);
  }
  for (auto [i, j] : kPairs) q.pair_sum += cfg.gamma[i] * cfg.gamma[j];
  if (q.total_vorticity != S(0)) {
    q.has_center = true;
    q.center = q.moment * (S(1) / q.total_vorticity);
    q.inertia_centered = S(0);
    for (int i = 0; i < 4; ++i)
      q.inertia_centered +=
          cfg.gamma[i] * (cfg.z[i] - q.center).norm_sq() / S(2);
  } else {
    q.inertia_centered = q.inertia_origin;
  }
  return q;
}

// Angular velocity of a relative equilibrium, -L/(2I), with the moment of
// inertia taken about the center of vorticity.
template <class S>
S angular_velocity(const Quantities<S>& q) {
  if (q.inertia_centered == S(0))
    throw std::domain_error("angular_velocity: degenerate configuration");
  return -q.pair_sum / (S(2) * q.inertia_centered);
}

// Cayley-Menger determinant of the six squared distances.  Vanishes
// exactly when the distances embed in the plane.
template <class S>
S cayley_menger(const std::array<S, 6>& rho) {
  // 5x5 bordered matrix; cofactor expansion is exact for any scalar.
  std::array<std::array<S, 5>, 5> m{};
  std::array<std::array<S, 4>, 4> d{};
  d[0][1] = rho[0]; d[0][2] = rho[1]; d[0][3] = rho[2];
  d[1][2] = rho[3]; d[1][3] = rho[4]; d[2][3] = rho[5];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) d[i][j] = d[j][i];
  for (int i = 0; i < 5; ++i) m[0][i] = (i == 0) ? S(0) : S(1);
  for (int i = 1; i < 5; ++i) {
    m[i][0] = S(1);
    for (int j = 1; j < 5; ++j) m[i][j] = d[i - 1][j - 1];
  }
  // Recursive cofactor determinant, n = 5.
  auto det = [](auto&& self, const auto& a, int n) -> S {
    if (n == 1) return a[0][0];
    S acc = S(0);
    for (int col = 0; col < n; ++col) {
      std::array<std::array<S, 5>, 5> sub{};
      for (int i = 1; i < n; ++i) {
        int cc = 0;
        for (int j = 0; j < n; ++j) {
          if (j == col) continue;
          sub[i - 1][cc++] = a[i][j];
        }
      }
      S term = a[0][col] * self(self, sub, n - 1);
      if (col % 2 == 0)
        acc = acc + term;
      else
        acc = acc - term;
    }
    return acc;
  };
  return det(det, m, 5);
}

// Signed area of a triangle.
template <class S>
S signed_area(const Vec2T<S>& a, const Vec2T<S>& b, const Vec2T<S>& c) {
  return (b - a).cross(c - a) / S(2);
}

template <class S>
DistanceState<S> to_mutual_distances(const Config4<S>& cfg) {
  DistanceState<S> st;
  for (int p = 0; p < 6; ++p) {
    auto [i, j] = kPairs[p];
    st.rho[p] = (cfg.z[i] - cfg.z[j]).norm_sq();
    if (st.rho[p] == S(0))
      throw std::domain_error("to_mutual_distances: colliding vortices");
  }
  // A_i is the oriented area of the triangle omitting vortex i, with the
  // alternating sign that makes A_1 + A_2 + A_3 + A_4 = 0 for any planar
  // configuration (and matches d(CM)/d(rho_ij) = -32 A_i A_j).
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> rest;
    int c = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) rest[c++] = j;
    S a = signed_area(cfg.z[rest[0]], cfg.z[rest[1]], cfg.z[rest[2]]);
    st.area[i] = (i % 2 == 0) ? a : S(-a);
  }
  st.cayley_menger = cayley_menger(st.rho);
  return st;
}

template <class S>
struct DziobekResult {
  S residual_12_34_vs_13_24{};  // product difference, first pair
  S residual_13_24_vs_14_23{};  // product difference, second pair
  S lambda_prime{};
  bool lambda_was_eliminated = false;
  bool symmetric_degenerate = false;  // all eliminations degenerate
};

// The two independent differences of the products
// (rho_12^-1 + l')(rho_34^-1 + l'), (rho_13^-1 + l')(rho_24^-1 + l'),
// (rho_14^-1 + l')(rho_23^-1 + l').  When lambda' is not supplied it is
// eliminated from the best-conditioned pair equality.
template <class S>
DziobekResult<S> dziobek_residuals(const DistanceState<S>& st) {
  const S a = S(1) / st.rho[0], c = S(1) / st.rho[5];  // 12, 34
  const S b = S(1) / st.rho[1], d = S(1) / st.rho[4];  // 13, 24
  const S e = S(1) / st.rho[2], f = S(1) / st.rho[3];  // 14, 23

  DziobekResult<S> r;
  S lp{};
  if (st.lambda_prime) {
    lp = *st.lambda_prime;
  } else {
    r.lambda_was_eliminated = true;
    // Pairwise elimination denominators.
    const S d1 = b + d - a - c;
    const S d2 = e + f - b - d;
    const S d3 = a + c - e - f;
    const S scale = a + b + c + d + e + f;
    auto mag = [](const S& v) { return v < S(0) ? S(-v) : v; };
    const S m1 = mag(d1), m2 = mag(d2), m3 = mag(d3);
    if (m1 >= m2 && m1 >= m3 && !detail::negligible(d1, scale)) {
      lp = (a * c - b * d) / d1;
    } else if (m2 >= m3 && !detail::negligible(d2, scale)) {
      lp = (b * d - e * f) / d2;
    } else if (!detail::negligible(d3, scale)) {
      lp = (e * f - a * c) / d3;
    } else {
      // Fully symmetric: every product shares the same factors, so the
      // differences reduce to the lambda'-free parts.
      r.symmetric_degenerate = true;
      r.residual_12_34_vs_13_24 = a * c - b * d;
      r.residual_13_24_vs_14_23 = b * d - e * f;
      r.lambda_prime = S(0);
      return r;
    }
  }
  r.lambda_prime = lp;
  r.residual_12_34_vs_13_24 = (a + lp) * (c + lp) - (b + lp) * (d + lp);
  r.residual_13_24_vs_14_23 = (b + lp) * (d + lp) - (e + lp) * (f + lp);
  return r;
}

// Necessary condition for a mutual-distance relative equilibrium:
// (r13^2-r12^2)(r23^2-r34^2)(r24^2-r14^2)
//   - (r12^2-r14^2)(r24^2-r34^2)(r13^2-r23^2).
template <class S>
S condition10_residual(const DistanceState<S>& st) {
  const S &r12 = st.rho[0], &r13 = st.rho[1], &r14 = st.rho[2];
  const S &r23 = st.rho[3], &r24 = st.rho[4], &r34 = st.rho[5];
  return (r13 - r12) * (r23 - r34) * (r24 - r14) -
         (r12 - r14) * (r24 - r34) * (r13 - r23);
}

template <class S>
struct VorticityRatio {
  int i = 0, j = 0;      // ratio gamma_i A_j / (gamma_j A_i)
  S value{};
  bool degenerate = false;  // difference quotient had a zero denominator
};

// The six strength ratios recovered from inverse-squared-distance
// difference quotients.  A vanishing denominator signals a symmetric
// degeneracy; callers fall back to the lambda'-bearing forms.
template <class S>
std::array<VorticityRatio<S>, 6> vorticity_ratios(const DistanceState<S>& st) {
  const S u12 = S(1) / st.rho[0], u13 = S(1) / st.rho[1],
          u14 = S(1) / st.rho[2], u23 = S(1) / st.rho[3],
          u24 = S(1) / st.rho[4], u34 = S(1) / st.rho[5];
  // rows: (num_a - num_b) / (den_a - den_b) for gamma_i A_j/(gamma_j A_i)
  struct Row {
    int i, j;
    S na, nb, da, db;
  };
  const std::array<Row, 6> rows = {{
      {0, 1, u23, u24, u13, u14},
      {0, 2, u23, u34, u12, u14},
      {0, 3, u24, u34, u12, u13},
      {1, 2, u13, u34, u12, u24},
      {1, 3, u14, u34, u12, u23},
      {2, 3, u14, u24, u13, u23},
  }};
  std::array<VorticityRatio<S>, 6> out;
  for (int r = 0; r < 6; ++r) {
    out[r].i = rows[r].i;
    out[r].j = rows[r].j;
    S den = rows[r].da - rows[r].db;
    S scale = rows[r].da + rows[r].db;
    if (detail::negligible(den, scale)) {
      out[r].degenerate = true;
    } else {
      out[r].value = (rows[r].na - rows[r].nb) / den;
    }
  }
  return out;
}

// Vortex velocities from the equations of motion.
template <class S>
std::array<Vec2T<S>, 4> velocities(const Config4<S>& cfg) {
  std::array<Vec2T<S>, 4> v{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      Vec2T<S> d = cfg.z[i] - cfg.z[j];
      S rho = d.norm_sq();
      if (rho == S(0)) throw std::domain_error("velocities: collision");
      v[i].x += cfg.gamma[j] * (S(0) - d.y) / rho;
      v[i].y += cfg.gamma[j] * d.x / rho;
    }
  }
  return v;
}

enum class MotionKind { AbsoluteEquilibrium, RigidTranslation, RelativeEquilibrium, None };

struct Certificate {
  MotionKind kind = MotionKind::None;
  bool pass = false;
  double tolerance = 0.0;
  double lambda = 0.0;       // -L/(2I) sign convention
  double omega = 0.0;        // fitted rotation rate (= -lambda)
  Vec2 center{};
  Vec2 translation{};
  double residual_motion = 0.0;
  double residual_dziobek = 0.0;
  double residual_condition10 = 0.0;
  bool collinear = false;
};

// Fits the best rigid motion (rotation about a center, translation, or
// rest) to the velocity field and reports residuals.
Certificate certify(const Config& cfg, double tol);

// Exact-arithmetic equilibrium test for rational configurations: the
// velocity field must be exactly a rigid rotation / translation / rest.
struct ExactCertificate {
  MotionKind kind = MotionKind::None;
  bool pass = false;
  Rational omega;
  bool dziobek_holds = false;
  bool condition10_holds = false;
};

ExactCertificate certify_exact(const RConfig& cfg);

}  // namespace vortex

#endif
