// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/vortexcore.hpp"

#include <algorithm>
#include <cmath>

namespace vortex {

namespace {

// Least-squares rigid-motion fit: velocity_j ~ omega * rot90(z_j) - w.
// Returns (omega, w).  The fit is centered, so it is exact whenever the
// field is exactly rigid.
template <class S>
std::pair<S, Vec2T<S>> fit_rotation(const std::array<Vec2T<S>, 4>& z,
                                    const std::array<Vec2T<S>, 4>& v) {
  Vec2T<S> zbar{}, vbar{};
  for (int i = 0; i < 4; ++i) {
    zbar = zbar + z[i];
    vbar = vbar + v[i];
  }
  zbar = zbar * (S(1) / S(4));
  vbar = vbar * (S(1) / S(4));
  S num{}, den{};
  for (int i = 0; i < 4; ++i) {
    Vec2T<S> u = rot90(Vec2T<S>{z[i].x - zbar.x, z[i].y - zbar.y});
    Vec2T<S> dv{v[i].x - vbar.x, v[i].y - vbar.y};
    num += dv.dot(u);
    den += u.norm_sq();
  }
  S omega{};
  if (den != S(0)) omega = num / den;
  Vec2T<S> w = rot90(zbar) * omega - vbar;
  return {omega, w};
}

}  // namespace

Certificate certify(const Config& cfg, double tol) {
  Certificate cert;
  cert.tolerance = tol;
  auto v = velocities(cfg);
  auto st = to_mutual_distances(cfg);
  auto q = quantities(cfg);

  double speed_scale = 0.0;
  for (const auto& vi : v) speed_scale = std::max(speed_scale, std::sqrt(vi.norm_sq()));
  double geo_scale = 0.0;
  for (const auto& zi : cfg.z) geo_scale = std::max(geo_scale, std::sqrt(zi.norm_sq()));

  double area_scale = 0.0;
  for (double a : st.area) area_scale = std::max(area_scale, std::fabs(a));
  cert.collinear = area_scale < tol * (1.0 + geo_scale * geo_scale);

  // Candidate motions, most degenerate first.
  double res_rest = speed_scale;
  Vec2 vmean{(v[0].x + v[1].x + v[2].x + v[3].x) / 4,
             (v[0].y + v[1].y + v[2].y + v[3].y) / 4};
  double res_trans = 0.0;
  for (const auto& vi : v)
    res_trans = std::max(res_trans, std::sqrt((vi - vmean).norm_sq()));
  auto [omega, w] = fit_rotation(cfg.z, v);
  double res_rot = 0.0;
  for (int i = 0; i < 4; ++i) {
    Vec2 pred = rot90(cfg.z[i]) * omega - w;
    res_rot = std::max(res_rot, std::sqrt((v[i] - pred).norm_sq()));
  }

  const double motion_tol = tol * (1.0 + speed_scale);
  if (res_rest < motion_tol) {
    cert.kind = MotionKind::AbsoluteEquilibrium;
    cert.residual_motion = res_rest;
  } else if (res_trans < motion_tol && std::fabs(omega) < tol) {
    cert.kind = MotionKind::RigidTranslation;
    cert.residual_motion = res_trans;
    cert.translation = vmean;
  } else {
    cert.kind = MotionKind::RelativeEquilibrium;
    cert.residual_motion = res_rot;
    cert.omega = omega;
    cert.lambda = -omega;
    if (omega != 0.0) cert.center = Vec2{w.y / omega, -w.x / omega};
  }

  // Mutual-distance residuals.  The distance formalism assumes nonzero
  // strengths and a nonzero total, and does not describe collinear
  // states; outside that regime the residuals are informational only.
  bool gamma_ok = std::fabs(q.total_vorticity) > 1e-12;
  for (double g : cfg.gamma)
    if (std::fabs(g) < 1e-12) gamma_ok = false;
  if (gamma_ok && cert.kind == MotionKind::RelativeEquilibrium)
    st.lambda_prime = cert.lambda / q.total_vorticity;
  auto dz = dziobek_residuals(st);
  cert.residual_dziobek =
      std::max(std::fabs(dz.residual_12_34_vs_13_24),
               std::fabs(dz.residual_13_24_vs_14_23));
  cert.residual_condition10 = std::fabs(condition10_residual(st));

  bool motion_ok = cert.residual_motion < motion_tol;
  if (cert.collinear || !gamma_ok ||
      cert.kind != MotionKind::RelativeEquilibrium) {
    cert.pass = motion_ok;
  } else {
    double rho_scale = 0.0;
    for (double r : st.rho) rho_scale = std::max(rho_scale, 1.0 / r);
    cert.pass = motion_ok &&
                cert.residual_dziobek < tol * (1.0 + rho_scale * rho_scale) &&
                cert.residual_condition10 <
                    tol * (1.0 + std::pow(geo_scale, 6.0));
  }
  if (!cert.pass && cert.kind != MotionKind::RelativeEquilibrium &&
      !motion_ok)
    cert.kind = MotionKind::None;
  return cert;
}

ExactCertificate certify_exact(const RConfig& cfg) {
  ExactCertificate out;
  auto v = velocities(cfg);
  auto [omega, w] = fit_rotation(cfg.z, v);
  bool rigid = true;
  for (int i = 0; i < 4; ++i) {
    Vec2T<Rational> pred = rot90(cfg.z[i]) * omega - w;
    if (pred.x != v[i].x || pred.y != v[i].y) rigid = false;
  }
  out.omega = omega;
  out.pass = rigid;
  if (rigid) {
    bool rest = true, trans = true;
    for (const auto& vi : v)
      if (sign(vi.x) != 0 || sign(vi.y) != 0) rest = false;
    if (sign(omega) != 0) trans = false;
    out.kind = rest ? MotionKind::AbsoluteEquilibrium
               : (trans ? MotionKind::RigidTranslation
                        : MotionKind::RelativeEquilibrium);
  }
  auto st = to_mutual_distances(cfg);
  auto dz = dziobek_residuals(st);
  out.dziobek_holds = sign(dz.residual_12_34_vs_13_24) == 0 &&
                      sign(dz.residual_13_24_vs_14_23) == 0;
  out.condition10_holds = sign(condition10_residual(st)) == 0;
  return out;
}

}  // namespace vortex
