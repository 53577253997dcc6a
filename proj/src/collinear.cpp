// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/collinear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vortex::collinear {

namespace {

// Coefficient table for p(x2): row j holds the x2^j line as a polynomial
// in gamma4 (ascending).  The published x2^6 line has a garbled sign
// pattern; the corrected line below was rederived by resultant
// elimination of the full system and is what the censuses rely on.
constexpr long kTable[13][6] = {
    {-1148, 1050, 1227, -472, -711, 162},
    {7068, 9846, -6492, -12102, 600, 1080},
    {9048, -49626, -66484, 2348, 13886, 2916},
    {-112340, -93138, 78260, 91162, 32192, 3864},
    {166860, 334552, 261207, 114080, 24859, 2078},
    {-5112, 6476, 9528, -6092, -4144, -656},
    {-62688, -156484, -145312, -62936, -14092, -1288},  // corrected line
    {8712, 8492, -5640, -8636, -2656, -272},
    {7020, 23290, 26937, 13688, 3007, 254},
    {-740, -1346, 100, 1234, 664, 88},
    {-312, -1250, -1836, -1204, -338, -28},
    {12, 38, 20, -30, -32, -8},
    {4, 20, 37, 32, 13, 2},
};

constexpr long kPublishedX6[6] = {62688, 156484, 145312, -62936, -14092, 1288};

Poly from_table(const Rational& g, bool published) {
  std::vector<Rational> c(13);
  for (int j = 0; j <= 12; ++j) {
    Rational acc(0), gp(1);
    for (int i = 0; i < 6; ++i) {
      long coeff = (published && j == 6) ? kPublishedX6[i] : kTable[j][i];
      acc += rat(coeff) * gp;
      gp *= g;
    }
    c[j] = acc;
  }
  return Poly(std::move(c));
}

// Cleared collinear system reduced to two polynomials in (x1, x2) after
// the linear unknowns lambda and lambda*c are eliminated; var 0 is x1.
std::pair<BiPoly, BiPoly> reduced_system(const Rational& g4) {
  BiPoly x1 = BiPoly::variable(0), x2 = BiPoly::variable(1);
  BiPoly one = BiPoly::constant(rat(1));
  BiPoly G = BiPoly::constant(g4);
  BiPoly two = BiPoly::constant(rat(2));

  BiPoly Q1 = (x1 - x2) * (x1 + one) * (x1 - one);
  BiPoly R1 = (x1 + one) * (x1 - one) + (x1 - x2) * (x1 - one) +
              G * (x1 - x2) * (x1 + one);
  BiPoly Q2 = (x2 - x1) * (x2 + one) * (x2 - one);
  BiPoly R2 = (x2 + one) * (x2 - one) + (x2 - x1) * (x2 - one) +
              G * (x2 - x1) * (x2 + one);
  BiPoly Q3 = (-one - x1) * (-one - x2) * BiPoly::constant(rat(-2));
  BiPoly R3 = (-one - x2) * BiPoly::constant(rat(-2)) +
              (-one - x1) * BiPoly::constant(rat(-2)) +
              G * (-one - x1) * (-one - x2);
  BiPoly Q4 = (one - x1) * (one - x2) * two;
  BiPoly R4 = (one - x2) * two + (one - x1) * two + (one - x1) * (one - x2);

  // lambda = A, lambda*c = B solve the two linear equations from vortices
  // 3 and 4; substituting into the first two equations and clearing
  // denominators gives the reduced pair.
  BiPoly M = R4 * Q3 - R3 * Q4;  // 2 Q3 Q4 * A
  BiPoly P = R3 * Q4 + R4 * Q3;  // -2 Q3 Q4 * B
  BiPoly G1 = (M * x1 + P) * Q1 - two * Q3 * Q4 * R1;
  BiPoly G2 = (M * x2 + P) * Q2 - two * Q3 * Q4 * R2;

  // Saturate collision and coincidence components excluded by the model.
  const BiPoly sats[] = {x1 - x2, x1 + x2, x1 - one,
                         x1 + one, x2 - one, x2 + one};
  for (BiPoly* Gp : {&G1, &G2}) {
    for (const auto& s : sats) {
      int main_var = s.degree(0) > 0 ? 0 : 1;
      while (true) {
        auto q = Gp->divide_exact_in(main_var, s);
        if (!q) break;
        *Gp = *q;
      }
    }
  }
  return {G1, G2};
}

int count_nondegenerate(const Poly& p, std::vector<Rational>* degenerate) {
  if (p.degree() < 1) return 0;
  int total = count_real_roots(p);
  for (long v : {1L, -1L}) {
    if (p.sign_at(rat(v)) == 0) {
      --total;
      if (degenerate) degenerate->push_back(rat(v));
    }
  }
  return total;
}

// Rotation rate and center from the two linear equations (vortices 3, 4)
// at numeric (x1, x2).
struct LineFit {
  double lambda, c;
  bool ok;
};

LineFit lambda_c_from(double x1, double x2, double g4) {
  double q3 = (-1 - x1) * (-1 - x2) * -2.0;
  double r3 = (-1 - x2) * -2.0 + (-1 - x1) * -2.0 + g4 * (-1 - x1) * (-1 - x2);
  double q4 = (1 - x1) * (1 - x2) * 2.0;
  double r4 = (1 - x2) * 2.0 + (1 - x1) * 2.0 + (1 - x1) * (1 - x2);
  if (q3 == 0 || q4 == 0) return {0, 0, false};
  double A = (r4 / q4 - r3 / q3) / 2.0;
  double B = (-r3 / q3 - r4 / q4) / 2.0;
  if (A == 0) return {0, 0, false};
  return {A, B / A, true};
}

void collinear_equations(const double v[4], double g4, double out[4]) {
  // v = (x1, x2, lambda, c); residuals of the four rate equations
  double xs[4] = {v[0], v[1], -1.0, 1.0};
  double gs[4] = {1.0, 1.0, 1.0, g4};
  for (int i = 0; i < 4; ++i) {
    double rhs = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      rhs += gs[j] / (xs[i] - xs[j]);
    }
    out[i] = v[2] * (xs[i] - v[3]) - rhs;
  }
}

// Square Newton iteration on (x1, x2, lambda, c); returns final residual.
double newton_polish(double v[4], double g4) {
  for (int it = 0; it < 25; ++it) {
    double r[4];
    collinear_equations(v, g4, r);
    double rn = 0;
    for (double ri : r) rn = std::max(rn, std::fabs(ri));
    if (rn < 1e-14) return rn;
    double J[4][4];
    for (int k = 0; k < 4; ++k) {
      double h = 1e-7 * (1.0 + std::fabs(v[k]));
      double w[4] = {v[0], v[1], v[2], v[3]};
      w[k] += h;
      double rp[4];
      collinear_equations(w, g4, rp);
      for (int i = 0; i < 4; ++i) J[i][k] = (rp[i] - r[i]) / h;
    }
    // Gaussian elimination with partial pivoting.
    double rhs[4] = {-r[0], -r[1], -r[2], -r[3]};
    for (int col = 0; col < 4; ++col) {
      int best = col;
      for (int row = col + 1; row < 4; ++row)
        if (std::fabs(J[row][col]) > std::fabs(J[best][col])) best = row;
      std::swap(J[col], J[best]);
      std::swap(rhs[col], rhs[best]);
      if (std::fabs(J[col][col]) < 1e-300) return rn;
      for (int row = col + 1; row < 4; ++row) {
        double f = J[row][col] / J[col][col];
        for (int cc = col; cc < 4; ++cc) J[row][cc] -= f * J[col][cc];
        rhs[row] -= f * rhs[col];
      }
    }
    double dx[4];
    for (int row = 3; row >= 0; --row) {
      double acc = rhs[row];
      for (int cc = row + 1; cc < 4; ++cc) acc -= J[row][cc] * dx[cc];
      dx[row] = acc / J[row][row];
    }
    for (int k = 0; k < 4; ++k) v[k] += dx[k];
  }
  double r[4];
  collinear_equations(v, g4, r);
  double rn = 0;
  for (double ri : r) rn = std::max(rn, std::fabs(ri));
  return rn;
}

Config embed_line(double x1, double x2, double g4) {
  Config cfg;
  cfg.z = {Vec2{x1, 0}, Vec2{x2, 0}, Vec2{-1, 0}, Vec2{1, 0}};
  cfg.gamma = {1, 1, 1, g4};
  return cfg;
}

// Sign of the discriminant of p via the Sylvester resultant of p and p'.
int discriminant_sign(const Poly& p) {
  int n = p.degree();
  if (n < 2) return 0;
  Poly dp = p.derivative();
  const size_t dim = static_cast<size_t>(2 * n - 1);
  std::vector<std::vector<Rational>> syl(dim,
                                         std::vector<Rational>(dim, Rational(0)));
  for (int row = 0; row < n - 1; ++row)
    for (int j = 0; j <= n; ++j) syl[row][row + (n - j)] = p[j];
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= n - 1; ++j) syl[n - 1 + row][row + (n - 1 - j)] = dp[j];
  Rational res = determinant(std::move(syl));
  // disc = (-1)^{n(n-1)/2} res / lead
  Rational disc = res / p.leading();
  if ((n * (n - 1) / 2) % 2) disc = -disc;
  return sign(disc);
}

}  // namespace

Poly asymmetric_polynomial(const Rational& gamma4) {
  return from_table(gamma4, false);
}

Poly asymmetric_polynomial_published(const Rational& gamma4) {
  return from_table(gamma4, true);
}

std::vector<TableDiff> table_discrepancies() {
  std::vector<TableDiff> out;
  for (int j = 0; j <= 12; ++j) {
    std::vector<Rational> pub, der;
    for (int i = 0; i < 6; ++i) {
      pub.push_back(rat(j == 6 ? kPublishedX6[i] : kTable[j][i]));
      der.push_back(rat(kTable[j][i]));
    }
    Poly p(std::move(pub)), d(std::move(der));
    if (!(p == d)) out.push_back({j, p, d});
  }
  return out;
}

std::vector<Solution> symmetric_solutions(const Rational& gamma4) {
  std::vector<Solution> out;
  if (gamma4 != Rational(1)) return out;  // compatible only with equal strengths
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  for (double x2 : {s3 + s2, s3 - s2, -s3 + s2, -s3 - s2}) {
    Solution s;
    s.x2 = x2;
    s.x1 = -x2;
    double y = x2 * x2;
    s.lambda = (y - 5) / (2 * (y - 1));
    s.c = 0;
    s.symmetric = true;
    s.gamma4 = 1.0;
    s.certificate = certify(embed_line(s.x1, s.x2, 1.0), 1e-10);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const Solution& a, const Solution& b) { return a.x2 < b.x2; });
  return out;
}

Census census(const Rational& gamma4) {
  Census c;
  c.gamma4 = gamma4;
  Poly p = asymmetric_polynomial(gamma4);
  c.polynomial_degree = p.degree();
  if (p.degree() >= 1)
    c.root_count = count_nondegenerate(p, &c.degenerate_roots);
  if (gamma4 == Rational(1)) {
    c.symmetric_count = 4;
    Poly quartic({rat(1), rat(0), rat(-10), rat(0), rat(1)});
    c.symmetric_contained = p.divmod(quartic).second.is_zero();
  }
  return c;
}

std::vector<Solution> solve(const Rational& gamma4, const Rational& eps) {
  if (sign(eps) <= 0) throw std::domain_error("solve: eps must be positive");
  const double g4 = gamma4.get_d();
  Poly p = asymmetric_polynomial(gamma4);
  auto [G1, G2] = reduced_system(gamma4);

  std::vector<Solution> out;
  for (const auto& iv : isolate_roots(p)) {
    RootInterval fine = refine_root(p, iv, eps);
    Rational x2r = (fine.lo + fine.hi) / 2;
    double x2 = x2r.get_d();
    if (std::fabs(std::fabs(x2) - 1.0) < 1e-12) continue;  // degenerate

    // Back-substitute: real roots of G1(x1, x2r) filtered through G2.
    Poly g1x = G1.substitute(1, x2r);
    Poly g2x = G2.substitute(1, x2r);
    if (g1x.is_zero() || g2x.is_zero()) continue;
    double best_res = 1e100;
    Solution best;
    for (double x1 : real_roots_double(g1x)) {
      if (std::fabs(x1 - x2) < 1e-10 || std::fabs(std::fabs(x1) - 1.0) < 1e-12)
        continue;
      double scale = std::pow(1.0 + std::fabs(x1), double(g2x.degree()));
      if (std::fabs(g2x.eval_double(x1)) > 1e-5 * scale) continue;
      LineFit lf = lambda_c_from(x1, x2, g4);
      if (!lf.ok) continue;
      double v[4] = {x1, x2, lf.lambda, lf.c};
      double res = newton_polish(v, g4);
      if (res < best_res && std::fabs(v[1] - x2) < 1e-6) {
        best_res = res;
        best.x1 = v[0];
        best.x2 = v[1];
        best.lambda = v[2];
        best.c = v[3];
      }
    }
    if (best_res > 1e-9) continue;  // unresolved candidate; none expected
    best.gamma4 = g4;
    best.has_interval = true;
    best.x2_lo = fine.lo;
    best.x2_hi = fine.hi;
    best.symmetric = std::fabs(best.x1 + x2) < 1e-9;
    best.certificate = certify(embed_line(best.x1, best.x2, g4), 1e-8);
    out.push_back(best);
  }
  return out;
}

std::vector<BifurcationBracket> bifurcation_values(const Rational& lo,
                                                   const Rational& hi,
                                                   int grid) {
  if (grid < 2) throw std::domain_error("bifurcation_values: grid >= 2");
  std::vector<Rational> xs;
  std::vector<int> counts;
  for (int i = 0; i <= grid; ++i) {
    Rational t = lo + (hi - lo) * rat(i, grid);
    xs.push_back(t);
    counts.push_back(census(t).root_count);
  }
  std::vector<BifurcationBracket> out;
  const Rational width_goal = rat(1, 1000000);
  for (int i = 0; i + 1 <= grid; ++i) {
    if (counts[i] == counts[i + 1]) continue;
    Rational a = xs[i], b = xs[i + 1];
    int ca = counts[i], cb = counts[i + 1];
    while (b - a > width_goal) {
      Rational m = (a + b) / 2;
      int cm = census(m).root_count;
      if (cm == ca) {
        a = m;
      } else {
        b = m;
        cb = cm;
      }
    }
    BifurcationBracket br{a, b, ca, cb, false};
    Poly pa = asymmetric_polynomial(a);
    Poly pb = asymmetric_polynomial(b);
    bool degree_jump = pa.degree() != pb.degree();
    bool disc_flip = discriminant_sign(pa) * discriminant_sign(pb) < 0;
    bool gcd_jump = Poly::gcd(pa, pa.derivative()).degree() > 0 ||
                    Poly::gcd(pb, pb.derivative()).degree() > 0;
    br.certified = degree_jump || disc_flip || gcd_jump;
    out.push_back(br);
  }
  return out;
}

Poly eliminate_independent(const Rational& gamma4) {
  auto [G1, G2] = reduced_system(gamma4);
  Poly R = resultant(G1, G2, 0);
  if (R.is_zero()) return R;
  R = R.primitive_part();
  for (Poly fac : {Poly({rat(-1), rat(1)}), Poly({rat(1), rat(1)})}) {
    while (true) {
      auto [q, r] = R.divmod(fac);
      if (r.is_zero() && !q.is_zero())
        R = q;
      else
        break;
    }
  }
  return R.primitive_part();
}

CrosscheckReport elimination_crosscheck(const std::vector<Rational>& samples) {
  CrosscheckReport report;
  report.published_table_diffs = table_discrepancies();
  report.ok = true;
  const Rational tight = rat(1, Integer("10000000000000"));  // 1e-13

  for (const auto& g : samples) {
    CrosscheckSample cs;
    cs.gamma4 = g;
    Poly hard = asymmetric_polynomial(g);
    Poly elim = eliminate_independent(g);
    if (elim.is_zero()) {
      report.ok = false;
      report.note += "resultant vanished at gamma4=" + to_string(g) + "; ";
      report.samples.push_back(cs);
      continue;
    }
    std::vector<Rational> degen;
    cs.hardcoded_roots = count_nondegenerate(hard, &degen);
    cs.eliminated_roots = count_nondegenerate(elim, nullptr);
    bool match = cs.hardcoded_roots == cs.eliminated_roots;
    if (match && cs.hardcoded_roots > 0) {
      auto hivs = isolate_roots(hard);
      auto eivs = isolate_roots(elim);
      // drop degenerate +-1 roots from both lists
      auto drop_degen = [](std::vector<RootInterval>& v, const Poly& p) {
        v.erase(std::remove_if(v.begin(), v.end(),
                               [&](const RootInterval& iv) {
                                 for (long d : {1L, -1L}) {
                                   Rational dv = rat(d);
                                   if (p.sign_at(dv) == 0 && iv.lo < dv &&
                                       !(iv.hi < dv))
                                     return true;
                                 }
                                 return false;
                               }),
                v.end());
      };
      drop_degen(hivs, hard);
      drop_degen(eivs, elim);
      if (hivs.size() != eivs.size()) {
        match = false;
      } else {
        for (size_t i = 0; i < hivs.size() && match; ++i) {
          RootInterval a = refine_root(hard, hivs[i], tight);
          RootInterval b = refine_root(elim, eivs[i], tight);
          // certified overlap at width well below 1e-10
          match = !(a.hi < b.lo || b.hi < a.lo);
        }
      }
    }
    cs.root_sets_match = match;
    if (!match) {
      report.ok = false;
      report.note += "root-set mismatch at gamma4=" + to_string(g) + "; ";
    }
    report.samples.push_back(cs);
  }

  // Full-table reconstruction when enough samples are supplied.
  if (samples.size() >= 13) {
    Poly lead_line;  // x^12 coefficient as a polynomial in gamma
    {
      std::vector<Rational> c;
      for (int i = 0; i < 6; ++i) c.push_back(rat(kTable[12][i]));
      lead_line = Poly(std::move(c));
    }
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> lines(13);
    for (const auto& g : samples) {
      if (lead_line.sign_at(g) == 0) continue;  // avoid degree drops
      Poly elim = eliminate_independent(g);
      if (elim.degree() != 12) continue;
      Rational scale = lead_line.eval(g) / elim.leading();
      xs.push_back(g);
      for (int j = 0; j <= 12; ++j) lines[j].push_back(elim[j] * scale);
      if (xs.size() >= 7) break;
    }
    if (xs.size() >= 6) {
      for (int j = 0; j <= 12; ++j) {
        Poly derived = interpolate(xs, lines[j]);
        std::vector<Rational> tc;
        for (int i = 0; i < 6; ++i) tc.push_back(rat(kTable[j][i]));
        if (!(derived == Poly(std::move(tc)))) {
          report.ok = false;
          report.note += "table line x^" + std::to_string(j) +
                         " disagrees with elimination; ";
        }
      }
    }
  }
  return report;
}

}  // namespace vortex::collinear
