// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/kite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vortex::kite {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kBaryK = kSqrt3;
constexpr double kBaryL = -1.0 / kSqrt3;
constexpr double kAsymptoteBound = 1e3;

struct Context {
  BiPoly F;        // cleared curve polynomial, var0 = k, var1 = l
  BiPoly Fk, Fl;   // partials
  BiPoly N, D;     // strength ratio numerator / denominator
  BiPoly Nk, Nl, Dk, Dl;
  BiPoly h1;       // published Lagrange eliminant (verified on the curve)
  BiPoly f1;       // cleared curve minus its k-free tail
  std::vector<Poly> F_coeffs_l;  // F as a polynomial in l: coeffs in k
  std::vector<Poly> F_coeffs_k;  // F as a polynomial in k: coeffs in l

  Context() {
    BiPoly k = BiPoly::variable(0), l = BiPoly::variable(1);
    BiPoly one = BiPoly::constant(rat(1));
    BiPoly two = BiPoly::constant(rat(2));
    F = (k + l) * (k + l) * (one + l * l) * two -
        two * (one + k * k) * (one + l * l) +
        l * (one + k * k) * (one + l * l) * (k + l) -
        BiPoly::constant(rat(4)) * l * (one + k * k) * (k + l);
    Fk = F.derivative(0);
    Fl = F.derivative(1);
    N = k * (BiPoly::constant(rat(3)) - k * k) * (one + l * l) * (k + l);
    D = two * (one + k * k) * (k * k + two * k * l - one);
    Nk = N.derivative(0);
    Nl = N.derivative(1);
    Dk = D.derivative(0);
    Dl = D.derivative(1);
    f1 = k * l * (k * (l * l - BiPoly::constant(rat(3))) * (k + l) + one +
                  BiPoly::constant(rat(5)) * l * l);

    struct T {
      int ke, le;
      long c;
    };
    static const T h1_terms[] = {
        {0, 0, 6},   {0, 4, 36},   {2, 0, -24}, {0, 6, 9},   {4, 0, -20},
        {6, 0, 24},  {8, 0, -18},  {0, 2, 9},   {5, 5, 30},  {4, 4, 304},
        {5, 3, 84},  {9, 1, -3},   {4, 6, -50}, {9, 5, 1},   {6, 6, 84},
        {5, 7, 32},  {7, 3, 200},  {6, 4, 208}, {7, 5, 76},  {1, 1, -27},
        {8, 4, 28},  {9, 3, 6},    {8, 6, 1},   {3, 1, 12},  {3, 3, 104},
        {1, 5, 9},   {4, 2, 126},  {2, 6, 36},  {1, 3, 54},  {2, 2, 36},
        {8, 2, 49},  {3, 5, 252},  {7, 1, -100}, {5, 1, 102}, {6, 2, -140}};
    for (const auto& t : h1_terms) h1.add_term(rat(t.c), t.ke, t.le);

    F_coeffs_l = F.coefficients_in(1);
    F_coeffs_k = F.coefficients_in(0);
  }
};

const Context& ctx() {
  static Context c;
  return c;
}

// --- small double-precision polynomial root finding (degree <= 4) ---

double eval_poly(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void roots_rec(const std::vector<double>& c, double lo, double hi,
               std::vector<double>& out) {
  int deg = static_cast<int>(c.size()) - 1;
  while (deg >= 0 && c[deg] == 0.0) --deg;
  if (deg <= 0) return;
  if (deg == 1) {
    double r = -c[0] / c[1];
    if (r > lo && r < hi) out.push_back(r);
    return;
  }
  std::vector<double> d(deg);
  for (int i = 1; i <= deg; ++i) d[i - 1] = c[i] * i;
  std::vector<double> crit;
  roots_rec(d, lo, hi, crit);
  std::vector<double> walls = {lo};
  for (double x : crit) walls.push_back(x);
  walls.push_back(hi);
  std::sort(walls.begin(), walls.end());
  for (size_t i = 0; i + 1 < walls.size(); ++i) {
    double a = walls[i], b = walls[i + 1];
    double fa = eval_poly(c, a), fb = eval_poly(c, b);
    if (fa == 0.0 && a > lo) continue;  // counted as wall root below
    if (fa * fb > 0) continue;
    for (int it = 0; it < 200 && b - a > 1e-16 * (1 + std::fabs(a)); ++it) {
      double m = 0.5 * (a + b), fm = eval_poly(c, m);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      if (fa * fm < 0) {
        b = m;
      } else {
        a = m;
        fa = fm;
      }
    }
    out.push_back(0.5 * (a + b));
  }
  // derivative roots that are also roots of c
  for (double x : crit)
    if (std::fabs(eval_poly(c, x)) < 1e-13) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
            out.end());
}

std::vector<double> poly_roots(const std::vector<double>& c, double lo,
                               double hi) {
  std::vector<double> out;
  roots_rec(c, lo, hi, out);
  return out;
}

// F(kv, l) as a polynomial in l, or F(k, lv) as a polynomial in k.
std::vector<double> slice_in_l(double kv) {
  std::vector<double> c;
  for (const auto& p : ctx().F_coeffs_l) c.push_back(p.eval_double(kv));
  return c;
}

std::vector<double> slice_in_k(double lv) {
  std::vector<double> c;
  for (const auto& p : ctx().F_coeffs_k) c.push_back(p.eval_double(lv));
  return c;
}

// Branch-following 1-D solve: root of the slice nearest to the hint.
std::optional<double> branch_root(const std::vector<double>& slice,
                                  double hint, double window) {
  auto roots = poly_roots(slice, hint - window, hint + window);
  if (roots.empty()) return std::nullopt;
  double best = roots[0];
  for (double r : roots)
    if (std::fabs(r - hint) < std::fabs(best - hint)) best = r;
  return best;
}

double scan_value(double k, double l, double gamma4) {
  return ctx().N.eval_double(k, l) - gamma4 * ctx().D.eval_double(k, l);
}

// 2-D Newton on (F, N - gamma4 D); returns true on convergence.
bool newton2d(double& k, double& l, double gamma4) {
  for (int it = 0; it < 60; ++it) {
    double f1v = ctx().F.eval_double(k, l);
    double f2v = scan_value(k, l, gamma4);
    double a = ctx().Fk.eval_double(k, l), b = ctx().Fl.eval_double(k, l);
    double c = ctx().Nk.eval_double(k, l) - gamma4 * ctx().Dk.eval_double(k, l);
    double d = ctx().Nl.eval_double(k, l) - gamma4 * ctx().Dl.eval_double(k, l);
    double det = a * d - b * c;
    if (std::fabs(det) < 1e-300) return false;
    double dk = (-f1v * d + f2v * b) / det;
    double dl = (-f2v * a + f1v * c) / det;
    k += dk;
    l += dl;
    if (std::fabs(dk) + std::fabs(dl) < 1e-14 * (1 + std::fabs(k) + std::fabs(l)))
      return true;
  }
  return false;
}

KiteClass classify(double k, double l, double gamma4) {
  if (std::fabs(k - kBaryK) < 1e-6 && std::fabs(l - kBaryL) < 1e-6)
    return KiteClass::EquilateralInterior;
  if (std::fabs(k + 1.0 / kSqrt3) < 1e-6 && std::fabs(l - kSqrt3) < 1e-6)
    return KiteClass::EquilateralExterior;
  if (std::fabs(k - 1.0) < 1e-8 && std::fabs(l - 1.0) < 1e-8)
    return KiteClass::Square;
  (void)gamma4;
  if (k > 0 && l > 0) return KiteClass::Convex;
  if (k < 0) return KiteClass::ConcaveExterior;
  return KiteClass::ConcaveInterior;
}

std::string arc_name(double k, double l) {
  if (l > 0) {
    if (k < -kSqrt3 - 1e-9) return "gamma3-tail";
    if (k < 0) return "gamma3";
    if (k <= std::sqrt(2.0) - 1.0) return "gamma2";
    if (k <= kSqrt3 + 1e-9) return "gamma1";
    return "gamma1-tail";
  }
  return "gamma4";
}

struct ArcSamples {
  std::string id;
  // parameterized by index; point i is (k[i], l[i])
  std::vector<double> ks, ls;
};

// Upper branch sampled by k; lower branch sampled by l.  The barycenter
// point (a base point of the whole family, where the strength ratio is
// indeterminate) gets a small exclusion collar on the lower branch.
std::vector<ArcSamples> sample_arcs(bool extended) {
  std::vector<ArcSamples> arcs;

  {  // upper branch between the k = +-sqrt(3) landmarks
    ArcSamples up;
    up.id = "upper";
    const int n = 4200;
    double hint = 1.2072;  // l at k = 0
    // march outward from k = 0 in both directions for hint continuity
    std::vector<std::pair<double, double>> right, left;
    for (int dir : {+1, -1}) {
      double h = hint;
      for (int i = 1; i <= n / 2; ++i) {
        double k = dir * (kSqrt3 - 2e-7) * i / (n / 2.0);
        auto r = branch_root(slice_in_l(k), h, 0.35 + 0.02 * std::fabs(k));
        if (!r) break;
        h = *r;
        if (k + h <= 1e-9) break;
        (dir > 0 ? right : left).emplace_back(k, h);
      }
    }
    std::reverse(left.begin(), left.end());
    auto l0 = branch_root(slice_in_l(0.0), hint, 0.3);
    for (auto& p : left) {
      up.ks.push_back(p.first);
      up.ls.push_back(p.second);
    }
    if (l0) {
      up.ks.push_back(0.0);
      up.ls.push_back(*l0);
    }
    for (auto& p : right) {
      up.ks.push_back(p.first);
      up.ls.push_back(p.second);
    }
    arcs.push_back(std::move(up));
  }

  {  // lower branch: l in (-sqrt3, 0), k > 0
    ArcSamples low;
    low.id = "lower";
    std::vector<double> lgrid;
    for (double e = 1e-7; e < 0.1; e *= 1.12) lgrid.push_back(-e);
    for (double l = -0.1; l > -1.648; l -= 0.002) lgrid.push_back(l);
    for (double e = 0.084; e > 4e-6; e *= 0.94) lgrid.push_back(-kSqrt3 + e);
    std::sort(lgrid.begin(), lgrid.end());  // ascending: near -sqrt3 first
    // march from P6 (k known there) outward in both directions
    size_t i6 = 0;
    for (size_t i = 0; i < lgrid.size(); ++i)
      if (std::fabs(lgrid[i] - kBaryL) < std::fabs(lgrid[i6] - kBaryL)) i6 = i;
    std::vector<std::pair<double, double>> fwd, bwd;
    double h = kBaryK;
    for (size_t i = i6; i < lgrid.size(); ++i) {  // toward l -> 0-
      double l = lgrid[i];
      auto r = branch_root(slice_in_k(l), h, 0.6 + 0.25 * h);
      if (!r || *r + l <= 1e-9 || *r > kAsymptoteBound) break;
      h = *r;
      fwd.emplace_back(*r, l);
    }
    h = kBaryK;
    for (size_t i = i6; i-- > 0;) {  // toward l -> -sqrt3
      double l = lgrid[i];
      auto r = branch_root(slice_in_k(l), h, 0.6 + 0.25 * h);
      if (!r || *r + l <= 1e-9 || *r > kAsymptoteBound) break;
      h = *r;
      bwd.emplace_back(*r, l);
    }
    std::reverse(bwd.begin(), bwd.end());
    for (auto& p : bwd) {
      low.ks.push_back(p.first);
      low.ls.push_back(p.second);
    }
    for (auto& p : fwd) {
      low.ks.push_back(p.first);
      low.ls.push_back(p.second);
    }
    arcs.push_back(std::move(low));
  }

  if (extended) {  // upper-branch tails beyond |k| = sqrt(3)
    for (int dir : {+1, -1}) {
      ArcSamples tail;
      tail.id = dir > 0 ? "gamma1-tail" : "gamma3-tail";
      double hint = dir > 0 ? 1.19175 : 2.74748;
      double k = dir * (kSqrt3 + 1e-7);
      while (std::fabs(k) < kAsymptoteBound) {
        auto r = branch_root(slice_in_l(k), hint, 0.4);
        if (!r || k + *r <= 1e-9) break;
        hint = *r;
        tail.ks.push_back(k);
        tail.ls.push_back(*r);
        k += dir * std::max(0.002, 0.002 * std::fabs(k));
      }
      arcs.push_back(std::move(tail));
    }
  }
  return arcs;
}

bool near_barycenter(double k, double l, double tol = 1e-5) {
  return std::fabs(k - kBaryK) < tol && std::fabs(l - kBaryL) < tol;
}

}  // namespace

std::string to_string(KiteClass c) {
  switch (c) {
    case KiteClass::Convex: return "convex";
    case KiteClass::Square: return "square";
    case KiteClass::ConcaveInterior: return "concave-interior";
    case KiteClass::ConcaveExterior: return "concave-exterior";
    case KiteClass::EquilateralInterior: return "equilateral-interior";
    case KiteClass::EquilateralExterior: return "equilateral-exterior";
  }
  return "?";
}

double f_value(double k, double l) {
  if (k + l == 0) throw std::domain_error("f_value: k + l = 0");
  double kl = k + l;
  return kl * (1.0 / (1 + k * k) - 1.0 / (kl * kl)) +
         2 * l * (0.25 - 1.0 / (1 + l * l));
}

std::optional<double> gamma4_of(double k, double l) {
  double den = ctx().D.eval_double(k, l);
  if (std::fabs(den) < 1e-12 * (1 + k * k) * (1 + k * k)) return std::nullopt;
  return ctx().N.eval_double(k, l) / den;
}

bool on_pole_curve(double k, double l, double tol) {
  return std::fabs(k * k + 2 * k * l - 1) < tol;
}

const BiPoly& curve_polynomial() { return ctx().F; }
const BiPoly& gamma4_numerator() { return ctx().N; }
const BiPoly& gamma4_denominator() { return ctx().D; }
const BiPoly& lagrange_eliminant() { return ctx().h1; }
const BiPoly& lagrange_f1() { return ctx().f1; }

std::vector<Landmark> landmarks() {
  std::vector<Landmark> out;
  const double s3 = kSqrt3, s2 = std::sqrt(2.0);

  // Roots of the curve slice at k = +-sqrt(3) are roots of the rational
  // norm polynomial A^2 - 3 B^2 where F(+-sqrt3, l) = A +- sqrt3 B.
  Poly A({rat(-2), rat(0), rat(-12), rat(0), rat(6)});
  Poly B({rat(0), rat(-8), rat(0), rat(8)});
  Poly norm = A * A - B * B * Poly::constant(rat(3));
  std::vector<double> k_s3, k_ms3;
  for (const auto& iv : isolate_roots(norm)) {
    double l = refine_root(norm, iv, rat(1, 1000000000000L)).midpoint_double();
    // attribute to the branch where the slice actually vanishes
    double vplus = eval_poly(slice_in_l(s3), l);
    double vminus = eval_poly(slice_in_l(-s3), l);
    if (std::fabs(vplus) < std::fabs(vminus))
      k_s3.push_back(l);
    else
      k_ms3.push_back(l);
  }
  for (double l : k_s3) {
    if (std::fabs(l - kBaryL) < 1e-9) continue;  // P6 handled below
    if (s3 + l <= 0) continue;
    if (l > 0)
      out.push_back({"P1", s3, l, "k=sqrt(3) on the curve, l>0"});
    else
      out.push_back({"P5", s3, l, "k=sqrt(3) on the curve, small l<0"});
  }
  for (double l : k_ms3) {
    if (-s3 + l <= 0) continue;
    out.push_back({"P3", -s3, l, "k=-sqrt(3) on the curve"});
  }
  // k = 0 limit point: 3 l^4 - 3 l^2 - 2 = 0, positive root
  Poly p4({rat(-2), rat(0), rat(-3), rat(0), rat(3)});
  for (const auto& iv : isolate_roots(p4)) {
    double l = refine_root(p4, iv, rat(1, 1000000000000L)).midpoint_double();
    if (l > 0) out.push_back({"P4", 0.0, l, "k=0 boundary of the curve closure"});
  }
  out.push_back({"P2", s2 - 1, 1.0, "pole curve meets the curve, l=1"});
  out.push_back({"P6", s3, -1.0 / s3, "barycenter family base point"});
  out.push_back({"P7", 1 + s2, -1.0, "pole curve meets the curve, l=-1"});
  std::sort(out.begin(), out.end(),
            [](const Landmark& a, const Landmark& b) { return a.name < b.name; });
  return out;
}

CurveArc trace_curve(KitePoint seed, double step, double k_min, double k_max,
                     double l_min, double l_max) {
  if (step <= 0) throw std::domain_error("trace_curve: step must be positive");
  const Context& c = ctx();
  auto correct = [&](double& k, double& l) {
    for (int it = 0; it < 12; ++it) {
      double f = c.F.eval_double(k, l);
      double gk = c.Fk.eval_double(k, l), gl = c.Fl.eval_double(k, l);
      double g2 = gk * gk + gl * gl;
      if (g2 == 0) return false;
      double dk = -f * gk / g2, dl = -f * gl / g2;
      k += dk;
      l += dl;
      if (std::fabs(dk) + std::fabs(dl) < 1e-13 * (1 + std::fabs(k) + std::fabs(l)))
        return true;
    }
    return false;
  };

  CurveArc arc;
  arc.id = "trace";
  double k = seed.k, l = seed.l;
  if (std::fabs(f_value(k, l)) > 1e-4)
    throw std::domain_error("trace_curve: seed is not on the curve");
  if (!correct(k, l)) throw std::domain_error("trace_curve: seed correction failed");

  for (int dir : {+1, -1}) {
    double kk = k, ll = l, h = step;
    std::vector<KitePoint> part;
    while (true) {
      double gk = c.Fk.eval_double(kk, ll), gl = c.Fl.eval_double(kk, ll);
      double norm = std::hypot(gk, gl);
      if (norm == 0) break;
      double tk = dir * (-gl / norm), tl = dir * (gk / norm);
      double nk = kk + h * tk, nl = ll + h * tl;
      if (!correct(nk, nl) ||
          std::hypot(nk - (kk + h * tk), nl - (ll + h * tl)) > h) {
        h /= 2;
        if (h < 1e-6) {
          arc.truncated = true;
          break;
        }
        continue;
      }
      kk = nk;
      ll = nl;
      part.push_back({kk, ll});
      if (kk < k_min || kk > k_max || ll < l_min || ll > l_max) break;
      if (kk + ll < 1e-9) break;
      if (std::fabs(kk) > kAsymptoteBound || std::fabs(ll) > kAsymptoteBound) break;
      if (part.size() > 100000) break;
      h = std::min(h * 1.3, step * 4);
    }
    if (dir > 0) {
      arc.samples = std::move(part);
    } else {
      std::reverse(part.begin(), part.end());
      part.push_back({k, l});
      part.insert(part.end(), arc.samples.begin(), arc.samples.end());
      arc.samples = std::move(part);
    }
  }
  return arc;
}

Config embed(const KitePoint& p, double gamma4) {
  Config cfg;
  cfg.z = {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -p.k}, Vec2{0, p.l}};
  cfg.gamma = {1, 1, 1, gamma4};
  return cfg;
}

std::vector<KiteSolution> solve_kite(double gamma4, double eps, bool extended) {
  if (eps <= 0) throw std::domain_error("solve_kite: eps must be positive");
  if (gamma4 == 0.0) return solve_kite_gamma4_zero(eps);

  std::vector<KiteSolution> out;
  auto arcs = sample_arcs(extended);
  for (const auto& arc : arcs) {
    const size_t n = arc.ks.size();
    if (n < 2) continue;
    std::vector<double> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = scan_value(arc.ks[i], arc.ls[i], gamma4);
    for (size_t i = 0; i + 1 < n; ++i) {
      // skip any interval touching the barycenter collar
      if (near_barycenter(arc.ks[i], arc.ls[i], 2e-4) ||
          near_barycenter(arc.ks[i + 1], arc.ls[i + 1], 2e-4))
        continue;
      if (s[i] == 0 || s[i] * s[i + 1] >= 0) continue;
      double k = 0.5 * (arc.ks[i] + arc.ks[i + 1]);
      double l = 0.5 * (arc.ls[i] + arc.ls[i + 1]);
      KiteSolution sol;
      sol.resolved = newton2d(k, l, gamma4);
      sol.point = {k, l};
      if (k + l <= 0 || std::fabs(k) < 1e-9 || std::fabs(l) < 1e-9) continue;
      if (near_barycenter(k, l)) continue;
      sol.gamma4 = gamma4;
      sol.arc = arc_name(k, l);
      sol.cls = classify(k, l, gamma4);
      sol.certificate = certify(embed(sol.point, gamma4), 1e-10);
      out.push_back(sol);
    }
  }

  // The unique extremum of the strength ratio on the exterior arc is a
  // tangency; the scan cannot see it, so it is appended when the target
  // strength matches its critical value.
  if (std::fabs(gamma4 - 1.0) < 1e-9) {
    bool present = false;
    for (const auto& sol : out)
      if (std::fabs(sol.point.k + 1.0 / kSqrt3) < 1e-4 &&
          std::fabs(sol.point.l - kSqrt3) < 1e-4)
        present = true;
    if (!present) {
      KiteSolution sol;
      sol.point = {-1.0 / kSqrt3, kSqrt3};
      sol.gamma4 = gamma4;
      sol.arc = "gamma3";
      sol.cls = KiteClass::EquilateralExterior;
      sol.certificate = certify(embed(sol.point, gamma4), 1e-10);
      out.push_back(sol);
    }
  }

  // Deduplicate (adjacent brackets can converge to one point).
  std::sort(out.begin(), out.end(), [](const KiteSolution& a, const KiteSolution& b) {
    return a.point.k < b.point.k;
  });
  std::vector<KiteSolution> dedup;
  for (auto& sol : out) {
    bool dup = false;
    for (auto& kept : dedup)
      if (std::fabs(kept.point.k - sol.point.k) < 1e-8 &&
          std::fabs(kept.point.l - sol.point.l) < 1e-8)
        dup = true;
    if (!dup) dedup.push_back(sol);
  }

  // Barycenter family holds for every strength.
  KiteSolution bary;
  bary.point = {kBaryK, kBaryL};
  bary.gamma4 = gamma4;
  bary.arc = "gamma4";
  bary.cls = KiteClass::EquilateralInterior;
  bary.certificate = certify(embed(bary.point, gamma4), 1e-10);
  dedup.push_back(bary);
  return dedup;
}

std::vector<KiteSolution> solve_kite_gamma4_zero(double eps) {
  if (eps <= 0) throw std::domain_error("eps must be positive");
  std::vector<KiteSolution> out;
  // The first two rate equations force k = +-sqrt(3); the third becomes a
  // quartic in l (equal to the curve slice at that k).
  for (double k : {kSqrt3, -kSqrt3}) {
    for (double l : poly_roots(slice_in_l(k), -kAsymptoteBound, kAsymptoteBound)) {
      if (k + l <= 1e-9 || std::fabs(l) < 1e-9) continue;
      KiteSolution sol;
      sol.point = {k, l};
      sol.gamma4 = 0.0;
      sol.arc = arc_name(k, l);
      sol.cls = classify(k, l, 0.0);
      sol.certificate = certify(embed(sol.point, 0.0), 1e-10);
      out.push_back(sol);
    }
  }
  std::sort(out.begin(), out.end(), [](const KiteSolution& a, const KiteSolution& b) {
    return a.point.l < b.point.l;
  });
  return out;
}

CriticalPointReport critical_points() {
  CriticalPointReport rep;
  const Context& c = ctx();

  // Exact resultant of the eliminant pair in k.
  Poly R = resultant(c.h1, c.F, 0);
  Poly lin({rat(0), rat(1)});
  Poly l2m3({rat(-3), rat(0), rat(1)});
  Poly l2p1({rat(1), rat(0), rat(1)});
  Poly t3l2m1({rat(-1), rat(0), rat(3)});
  Poly pref = lin * l2m3 * (t3l2m1 * t3l2m1);
  for (int i = 0; i < 12; ++i) pref = pref * l2p1;
  auto [quot, rem] = R.divmod(pref);
  if (rem.is_zero() && quot.degree() == 20) {
    rep.factorization_matches = true;
    // normalize away the leading constant 6144
    Poly r20 = quot / quot.leading() * rat(36);
    rep.r_factor = r20;
    Poly published({rat(243), rat(0), rat(1455), rat(0), rat(324), rat(0),
                    rat(-18904), rat(0), rat(51534), rat(0), rat(-61986),
                    rat(0), rat(33264), rat(0), rat(-1776), rat(0), rat(-2457),
                    rat(0), rat(315), rat(0), rat(36)});
    rep.r_matches_published = (r20 == published);
    rep.r_real_roots = count_real_roots(r20);
    rep.note +=
        "constant factor " + vortex::to_string(Rational(quot.leading() / rat(36))) + "; ";
  } else {
    rep.note += "resultant does not match the published factorization; ";
    rep.r_factor = quot;
  }

  // Real roots of the resultant away from the chart-excluded l = 0.
  Poly Rl = R;
  while (true) {
    auto [q, r0] = Rl.divmod(lin);
    if (r0.is_zero() && !q.is_zero())
      Rl = q;
    else
      break;
  }
  rep.resultant_real_roots_nonzero_l =
      Rl.degree() > 0 ? count_real_roots(Rl) : 0;
  bool div_sqrt3 = Rl.divmod(l2m3).second.is_zero();
  bool div_inv = Rl.divmod(t3l2m1).second.is_zero();
  rep.roots_are_pm_sqrt3_and_pm_inv_sqrt3 =
      rep.resultant_real_roots_nonzero_l == 4 && div_sqrt3 && div_inv;

  // Verify the published eliminant against an independent rederivation:
  // clearing the gradient-parallelism condition of (strength ratio, curve)
  // must produce the same real intersection slices with the curve.
  {
    BiPoly hraw = (c.Nk * c.D - c.N * c.Dk) * c.Fl -
                  (c.Nl * c.D - c.N * c.Dl) * c.Fk;
    Poly Rraw = resultant(hraw, c.F, 0).primitive_part();
    auto iv_a = isolate_roots(Rraw);
    auto iv_b = isolate_roots(R.primitive_part());
    bool same = iv_a.size() == iv_b.size();
    if (same) {
      Rational tight = rat(1, 10000000000L);
      for (size_t i = 0; i < iv_a.size() && same; ++i) {
        RootInterval a = refine_root(Rraw, iv_a[i], tight);
        RootInterval b = refine_root(R.primitive_part(), iv_b[i], tight);
        same = !(a.hi < b.lo || b.hi < a.lo);
      }
    }
    rep.h1_verified_on_curve = same;
  }

  // Back-solve candidates at each admissible root and keep genuine
  // constrained extrema (multiplier well defined and nonzero).
  const double cands[] = {kSqrt3, -kSqrt3, 1.0 / kSqrt3, -1.0 / kSqrt3};
  for (double l0 : cands) {
    for (double k0 : poly_roots(slice_in_k(l0), -kAsymptoteBound, kAsymptoteBound)) {
      if (k0 + l0 <= 1e-9 || std::fabs(k0) < 1e-9) continue;
      if (on_pole_curve(k0, l0, 1e-7)) continue;  // ratio undefined there
      if (std::fabs(c.h1.eval_double(k0, l0)) > 1e-7) continue;
      // Lagrange multiplier from both gradient components must agree and
      // be nonzero.
      double dv = c.D.eval_double(k0, l0);
      double gk = (c.Nk.eval_double(k0, l0) * dv -
                   c.N.eval_double(k0, l0) * c.Dk.eval_double(k0, l0)) /
                  (dv * dv);
      double gl = (c.Nl.eval_double(k0, l0) * dv -
                   c.N.eval_double(k0, l0) * c.Dl.eval_double(k0, l0)) /
                  (dv * dv);
      double fk = c.Fk.eval_double(k0, l0), fl = c.Fl.eval_double(k0, l0);
      double denom = fk * fk + fl * fl;
      if (denom == 0) continue;
      double lambda = -(gk * fk + gl * fl) / denom;
      double res = std::hypot(gk + lambda * fk, gl + lambda * fl);
      if (res > 1e-8 * (1 + std::fabs(lambda)) || std::fabs(lambda) < 1e-12)
        continue;
      auto g4 = gamma4_of(k0, l0);
      if (!g4) continue;
      rep.critical.push_back({{k0, l0}, *g4});
    }
  }
  return rep;
}

}  // namespace vortex::kite
