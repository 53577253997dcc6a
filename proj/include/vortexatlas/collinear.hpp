// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// Collinear relative equilibria with three unit strengths, normalized to
// x3 = -1, x4 = 1.  The asymmetric families are roots of a degree-12
// eliminant p(x2) with coefficients polynomial in the fourth strength;
// censuses are exact Sturm counts, and an independent resultant
// elimination of the full system serves as a transcription firewall for
// the hardcoded coefficient table.

#ifndef VORTEXATLAS_COLLINEAR_HPP
#define VORTEXATLAS_COLLINEAR_HPP

#include <string>
#include <vector>

#include "vortexatlas/bipoly.hpp"
#include "vortexatlas/sturm.hpp"
#include "vortexatlas/vortexcore.hpp"

namespace vortex::collinear {

// The degree-12 eliminant p(x2) at a rational gamma4, from the verified
// coefficient table (one line of the published table is corrected; see
// asymmetric_polynomial_published and elimination_crosscheck).
Poly asymmetric_polynomial(const Rational& gamma4);

// The same polynomial built from the table exactly as published.
Poly asymmetric_polynomial_published(const Rational& gamma4);

// Coefficient lines (in gamma) that differ between the published table
// and the independently derived eliminant; empty when they agree.
struct TableDiff {
  int x_power;
  Poly published_line;   // polynomial in gamma
  Poly derived_line;
};
std::vector<TableDiff> table_discrepancies();

struct Solution {
  double x1 = 0, x2 = 0;
  double lambda = 0;  // rotation rate in the collinear equations
  double c = 0;       // center on the line
  bool symmetric = false;
  double gamma4 = 0;
  Certificate certificate;
  // certified isolating interval of x2, when found through the eliminant
  bool has_interval = false;
  Rational x2_lo, x2_hi;
};

// Closed-form symmetric family x1 = -x2; nonempty only when all four
// strengths are equal.
std::vector<Solution> symmetric_solutions(const Rational& gamma4);

struct Census {
  Rational gamma4;
  int root_count = 0;       // distinct real roots of p, degenerate excluded
  int symmetric_count = 0;  // closed-form symmetric family size
  bool symmetric_contained = false;  // symmetric roots divide p
  std::vector<Rational> degenerate_roots;  // roots at x2 = +-1
  int polynomial_degree = 0;
};

Census census(const Rational& gamma4);

// All collinear solutions at the given strength: every root of p refined
// below eps, back-substituted, polished and certified.
std::vector<Solution> solve(const Rational& gamma4, const Rational& eps);

struct BifurcationBracket {
  Rational lo, hi;
  int count_lo = 0, count_hi = 0;
  bool certified = false;  // discriminant / leading-coefficient change
};

// Brackets every census change inside [lo, hi] sampled on `grid` points.
std::vector<BifurcationBracket> bifurcation_values(const Rational& lo,
                                                   const Rational& hi,
                                                   int grid);

struct CrosscheckSample {
  Rational gamma4;
  int hardcoded_roots = 0;
  int eliminated_roots = 0;
  bool root_sets_match = false;
};

struct CrosscheckReport {
  bool ok = false;
  std::vector<CrosscheckSample> samples;
  std::vector<TableDiff> published_table_diffs;
  std::string note;
};

// Independently eliminates x1, lambda, c from the cleared collinear
// system at each sample and compares non-degenerate root sets against
// the hardcoded p(x2).
CrosscheckReport elimination_crosscheck(const std::vector<Rational>& samples);

// The eliminant computed by resultants alone (exposed for tests).
Poly eliminate_independent(const Rational& gamma4);

}  // namespace vortex::collinear

#endif
