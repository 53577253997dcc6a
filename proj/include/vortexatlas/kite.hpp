// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// Symmetric strictly planar (kite) relative equilibria in the chart with
// unit strengths at (-1,0), (1,0), the third unit vortex at (0,-k) and
// the free strength at (0,l), k + l > 0.  The solution curve f(k,l) = 0
// has two branches; solutions for a given strength are located by sign
// scanning of the strength ratio along the branch arcs and certified on
// the embedded four-vortex configuration.

#ifndef VORTEXATLAS_KITE_HPP
#define VORTEXATLAS_KITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "vortexatlas/bipoly.hpp"
#include "vortexatlas/sturm.hpp"
#include "vortexatlas/vortexcore.hpp"

namespace vortex::kite {

struct KitePoint {
  double k = 0;
  double l = 0;
};

enum class KiteClass {
  Convex,
  Square,
  ConcaveInterior,      // free vortex inside the unit triangle
  ConcaveExterior,      // free vortex on the hull, a unit vortex inside
  EquilateralInterior,  // barycenter family
  EquilateralExterior,  // unit vortex at the barycenter of the other three
};

std::string to_string(KiteClass c);

// Reduced symmetric equilibrium condition (zero on the solution curve).
double f_value(double k, double l);

// Free strength forced by the chart point; nullopt on the pole curve
// l = (1-k^2)/(2k) where the closed form blows up.
std::optional<double> gamma4_of(double k, double l);

bool on_pole_curve(double k, double l, double tol = 1e-9);

// Polynomial form of the curve (variable 0 is k, variable 1 is l).
const BiPoly& curve_polynomial();
// Numerator and denominator of the strength ratio, cleared.
const BiPoly& gamma4_numerator();
const BiPoly& gamma4_denominator();

struct Landmark {
  std::string name;
  double k = 0, l = 0;
  std::string condition;
};

// The named intersection points P1..P7 of the solution curve with the
// lines k = +-sqrt(3), k = 0 and the pole curve, each from certified
// one-dimensional root isolation or a closed form.
std::vector<Landmark> landmarks();

struct CurveArc {
  std::string id;
  std::vector<KitePoint> samples;
  bool truncated = false;  // stopped at the minimum step, not at bounds
};

// Predictor-corrector continuation along f = 0 from a seed on the curve.
CurveArc trace_curve(KitePoint seed, double step, double k_min, double k_max,
                     double l_min, double l_max);

struct KiteSolution {
  KitePoint point;
  KiteClass cls = KiteClass::Convex;
  double gamma4 = 0;
  std::string arc;
  Certificate certificate;
  bool resolved = true;  // false: candidate did not converge, reported anyway
};

// Embeds a chart point as a planar configuration with the given strength.
Config embed(const KitePoint& p, double gamma4);

// All kite solutions with the given free strength on the solution arcs
// (the barycenter family is always included).  Use the dedicated variant
// for strength zero.  `extended` additionally scans the branch tails
// beyond the k = +-sqrt(3) landmarks.
std::vector<KiteSolution> solve_kite(double gamma4, double eps,
                                     bool extended = false);

// Direct solution of the strength-zero case from the rate equations.
std::vector<KiteSolution> solve_kite_gamma4_zero(double eps);

struct CriticalPointReport {
  bool h1_verified_on_curve = false;   // printed eliminant matches rederivation
  bool factorization_matches = false;  // resultant = 6144 l (l^2-3)(l^2+1)^12 (3l^2-1)^2 r
  bool r_matches_published = false;    // degree-20 factor equals published r
  int r_real_roots = -1;
  int resultant_real_roots_nonzero_l = -1;  // roots with l != 0
  bool roots_are_pm_sqrt3_and_pm_inv_sqrt3 = false;
  Poly r_factor;
  std::vector<std::pair<KitePoint, double>> critical;  // point, gamma4 there
  std::string note;
};

// Critical points of the strength ratio along the solution curve via the
// exact Lagrange-multiplier eliminant and its resultant in k.
CriticalPointReport critical_points();

// Eliminant of the Lagrange system as published (degrees 9 and 7).
const BiPoly& lagrange_eliminant();
// Cleared second factor used in the resultant (degrees 3 and 4).
const BiPoly& lagrange_f1();

}  // namespace vortex::kite

#endif
