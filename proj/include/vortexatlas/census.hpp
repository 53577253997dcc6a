// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// Aggregated counts of labeled equilibrium classes per value of the free
// strength, combining the collinear, kite and rhombus families with the
// labeling multiplicities of each geometric class.  Published row totals
// are kept alongside; any disagreement is reported per family rather than
// silently normalized.

#ifndef VORTEXATLAS_CENSUS_HPP
#define VORTEXATLAS_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "vortexatlas/collinear.hpp"
#include "vortexatlas/kite.hpp"
#include "vortexatlas/rhombus.hpp"

namespace vortex::census {

// Labeled-configuration multiplicity of one geometric solution class,
// modulo rotation and scaling.
int count_labelings(kite::KiteClass cls, double gamma4);

struct OrbitCheck {
  std::string cls;
  int table_value = 0;
  int rotation_only = 0;
  int with_reflections = 0;
  bool table_consistent = false;  // table matches one of the two conventions
  std::string convention;         // which one it matches
};

// Brute-force validation of the multiplicity table: enumerate the
// strength-preserving labelings of a representative geometry of each
// class and count orbits under rotation+scaling (and, for comparison,
// with reflections included).
std::vector<OrbitCheck> validate_labelings();

struct CensusRow {
  Rational gamma4;
  int collinear = 0;
  int convex = 0;             // includes the square
  int concave_interior = 0;
  int concave_exterior = 0;
  int equilateral = 0;        // barycenter family and its strength-1 twin
  int rhombus_extra = 0;      // certified non-square rhombi (none expected)
  int total = 0;
  std::optional<int> paper_total;
  bool match = false;
  bool incomplete = false;    // an unresolved solver candidate exists
  std::vector<std::string> discrepancies;  // per-family vs published rows
};

CensusRow census_at(const Rational& gamma4);

std::optional<int> paper_row_total(const Rational& gamma4);

struct SweepResult {
  std::vector<CensusRow> rows;
  std::vector<collinear::BifurcationBracket> collinear_bifurcations;
  std::vector<Rational> known_bifurcations;  // -1/2, 0, 1 on the surveyed line
};

// Census at `samples` evenly spaced strengths in [lo, hi]; rows computed
// in parallel over `workers` threads with a deterministic merge.
SweepResult sweep(const Rational& lo, const Rational& hi, int samples,
                  int workers = 1);

}  // namespace vortex::census

#endif
