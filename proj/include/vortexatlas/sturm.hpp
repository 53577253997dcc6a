// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VORTEXATLAS_STURM_HPP
#define VORTEXATLAS_STURM_HPP

#include <vector>

#include "vortexatlas/polynomial.hpp"

namespace vortex {

// Open-left, closed-right interval certified to contain exactly one root
// of the square-free part of the target polynomial.  Endpoints are never
// roots of the square-free part.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  double midpoint_double() const { return Rational((lo + hi) / 2).get_d(); }
  Rational width() const { return hi - lo; }
};

// Canonical signed-remainder chain p, p', -rem(...), ... down to a constant.
std::vector<Poly> sturm_sequence(const Poly& p);

// Number of distinct real roots of p in (lo, hi], by Sturm sign variations.
// Exact for arbitrary rational endpoints (including roots) and +/-infinity.
int count_real_roots(const Poly& p, const ExtendedRational& lo,
                     const ExtendedRational& hi);
int count_real_roots(const Poly& p);  // whole real line

// Pairwise-disjoint isolating intervals, one per distinct real root,
// ordered left to right, with multiplicity hints from the gcd chain.
std::vector<RootInterval> isolate_roots(const Poly& p);

// Shrinks an isolating interval below eps by sign bisection on the
// square-free part.  Throws if the interval does not isolate a root.
RootInterval refine_root(const Poly& p, const RootInterval& interval,
                         const Rational& eps);

// Convenience: all real roots refined to double precision.
std::vector<double> real_roots_double(const Poly& p);

}  // namespace vortex

#endif
