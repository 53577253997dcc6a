// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/special.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace vortex::special {

namespace {

// Gauss-Newton step for a generic residual function via forward
// differences; returns the final residual norm.
template <class F>
double gauss_newton(F&& residuals, std::vector<double>& x, int iters) {
  const int m = static_cast<int>(residuals(x).size());
  const int n = static_cast<int>(x.size());
  double final_norm = 1e300;
  for (int it = 0; it < iters; ++it) {
    std::vector<double> r = residuals(x);
    double norm = 0;
    for (double v : r) norm += v * v;
    norm = std::sqrt(norm);
    final_norm = norm;
    if (norm < 1e-15) break;
    std::vector<std::vector<double>> J(m, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
      double h = 1e-7 * (1 + std::fabs(x[k]));
      std::vector<double> xp = x;
      xp[k] += h;
      std::vector<double> rp = residuals(xp);
      for (int i = 0; i < m; ++i) J[i][k] = (rp[i] - r[i]) / h;
    }
    // normal equations J^T J dx = -J^T r  (n is tiny here)
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0));
    std::vector<double> b(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        for (int q = 0; q < m; ++q) A[i][j] += J[q][i] * J[q][j];
      for (int q = 0; q < m; ++q) b[i] -= J[q][i] * r[q];
    }
    for (int i = 0; i < n; ++i) A[i][i] *= 1.0 + 1e-12;
    // solve A dx = b by Gaussian elimination
    for (int col = 0; col < n; ++col) {
      int best = col;
      for (int row = col + 1; row < n; ++row)
        if (std::fabs(A[row][col]) > std::fabs(A[best][col])) best = row;
      std::swap(A[col], A[best]);
      std::swap(b[col], b[best]);
      if (std::fabs(A[col][col]) < 1e-300) return final_norm;
      for (int row = col + 1; row < n; ++row) {
        double f = A[row][col] / A[col][col];
        for (int cc = col; cc < n; ++cc) A[row][cc] -= f * A[col][cc];
        b[row] -= f * b[col];
      }
    }
    std::vector<double> dx(n);
    for (int row = n - 1; row >= 0; --row) {
      double acc = b[row];
      for (int cc = row + 1; cc < n; ++cc) acc -= A[row][cc] * dx[cc];
      dx[row] = acc / A[row][row];
    }
    for (int k = 0; k < n; ++k) x[k] += dx[k];
  }
  return final_norm;
}

}  // namespace

SpecialCaseResult absolute_equilibria(const std::array<double, 4>& gammas) {
  double L = 0;
  for (auto [i, j] : kPairs) L += gammas[i] * gammas[j];
  if (std::fabs(L) > 1e-12)
    throw std::domain_error(
        "absolute_equilibria: pair sum L must vanish for equilibria");
  const double g1 = gammas[0], g2 = gammas[1], g3 = gammas[2], g4 = gammas[3];
  double d1 = 2 * (g2 + g3 + g4);
  double d2 = 2 * (g1 + g3 + g4);
  if (d1 == 0 || d2 == 0)
    throw std::domain_error("absolute_equilibria: degenerate strengths");

  SpecialCaseResult out;
  out.kind = SpecialCaseResult::Kind::AbsoluteEquilibrium;
  const double s3 = std::sqrt(3.0);
  for (int branch : {+1, -1}) {
    Config cfg;
    cfg.gamma = gammas;
    cfg.z[0] = Vec2{(2 * g4 + g2) / d1, branch * g2 * s3 / d1};
    cfg.z[1] = Vec2{(2 * g4 + g1) / d2, -branch * g1 * s3 / d2};
    cfg.z[2] = Vec2{1, 0};
    cfg.z[3] = Vec2{0, 0};
    out.configurations.push_back(cfg);
    out.certificates.push_back(certify(cfg, 1e-10));
  }
  return out;
}

SpecialCaseResult rigid_translation_search(const std::array<double, 4>& gammas,
                                           double eps) {
  double total = gammas[0] + gammas[1] + gammas[2] + gammas[3];
  if (std::fabs(total) > 1e-12)
    throw std::domain_error(
        "rigid_translation_search: total vorticity must vanish");
  if (eps <= 0) throw std::domain_error("eps must be positive");

  auto residuals = [&](const std::vector<double>& x) {
    Config cfg;
    cfg.gamma = gammas;
    cfg.z = {Vec2{x[0], x[1]}, Vec2{x[2], x[3]}, Vec2{1, 0}, Vec2{0, 0}};
    std::vector<double> r;
    for (auto [i, j] : kPairs) {
      Vec2 d = cfg.z[i] - cfg.z[j];
      if (d.norm_sq() < 1e-10) {
        r.assign(6, 1e6);  // collision guard
        return r;
      }
    }
    auto v = velocities(cfg);
    r = {v[0].x - v[3].x, v[0].y - v[3].y, v[1].x - v[3].x,
         v[1].y - v[3].y, v[2].x - v[3].x, v[2].y - v[3].y};
    return r;
  };

  SpecialCaseResult out;
  out.kind = SpecialCaseResult::Kind::RigidTranslation;
  std::mt19937 rng(20260808);  // fixed seed: deterministic search
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  for (int trial = 0; trial < 4000; ++trial) {
    std::vector<double> x = {box(rng), box(rng), box(rng), box(rng)};
    double res = gauss_newton(residuals, x, 80);
    if (res > 1e-12) continue;
    Config cfg;
    cfg.gamma = gammas;
    cfg.z = {Vec2{x[0], x[1]}, Vec2{x[2], x[3]}, Vec2{1, 0}, Vec2{0, 0}};
    auto v = velocities(cfg);
    double speed = std::sqrt(v[3].norm_sq());
    if (speed < eps) continue;  // rest, not a translation
    bool dup = false;
    for (const auto& known : out.configurations) {
      double dist = 0;
      for (int i = 0; i < 4; ++i)
        dist = std::max(dist, std::sqrt((known.z[i] - cfg.z[i]).norm_sq()));
      if (dist < 1e-6) dup = true;
    }
    if (dup) continue;
    out.configurations.push_back(cfg);
    out.translation_velocities.push_back(v[3]);
    out.certificates.push_back(certify(cfg, eps));
  }
  return out;
}

Config concave_kite_zero_total_vorticity() {
  // strengths (1,1,1,-3); unknowns (k, l, omega, cy) for the embedding
  // (-1,0), (1,0), (0,-k), (0,l) rotating about (0, cy).
  auto residuals = [](const std::vector<double>& x) {
    double k = x[0], l = x[1], omega = x[2], cy = x[3];
    Config cfg;
    cfg.gamma = {1, 1, 1, -3};
    cfg.z = {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -k}, Vec2{0, l}};
    std::vector<double> r;
    if (k + l <= 1e-6 || std::fabs(l) < 1e-9 || std::fabs(k) < 1e-9) {
      r.assign(5, 1e6);
      return r;
    }
    auto v = velocities(cfg);
    Vec2 c{0, cy};
    auto pred = [&](int i) { return rot90(cfg.z[i] - c) * omega; };
    r = {v[0].x - pred(0).x, v[0].y - pred(0).y, v[2].x - pred(2).x,
         v[3].x - pred(3).x, v[1].y - pred(1).y};
    return r;
  };
  // The configuration has the free vortex strictly inside the unit
  // triangle, so l is small and negative; scan seeds deterministically.
  // The equilateral triangle with the free vortex at its barycenter also
  // solves the system for every strength and has to be excluded to reach
  // the isosceles solution.
  const double s3 = std::sqrt(3.0);
  double best_res = 1e300;
  std::vector<double> best;
  for (double k0 = 0.4; k0 <= 3.01; k0 += 0.1) {
    for (double l0 = -0.9; l0 <= -0.049; l0 += 0.05) {
      if (k0 + l0 <= 0.05) continue;
      std::vector<double> x = {k0, l0, 1.0, 0.0};
      double res = gauss_newton(residuals, x, 60);
      bool equilateral = std::fabs(x[0] - s3) < 1e-3 && std::fabs(x[1] + 1 / s3) < 1e-3;
      if (res < best_res && !equilateral && x[0] > 0 && x[1] < 0 &&
          x[0] + x[1] > 0 && -x[1] < x[0]) {
        best_res = res;
        best = x;
      }
    }
  }
  if (best.empty() || best_res > 1e-11)
    throw std::runtime_error("zero-total-vorticity kite search failed");
  Config cfg;
  cfg.gamma = {1, 1, 1, -3};
  cfg.z = {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -best[0]}, Vec2{0, best[1]}};
  return cfg;
}

}  // namespace vortex::special
