// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only root-counting oracle: Descartes bisection.  Counts distinct
// real roots by recursive interval splitting, accepting an interval once
// the sign-variation count of the Moebius-transformed polynomial is 0 or
// 1.  Deliberately shares nothing with the Sturm-chain implementation it
// cross-checks.

#ifndef VORTEXATLAS_TESTS_DESCARTES_ORACLE_HPP
#define VORTEXATLAS_TESTS_DESCARTES_ORACLE_HPP

#include "vortexatlas/polynomial.hpp"

namespace vortex::testing {

inline Poly taylor_shift_one(const Poly& p) {
  std::vector<Rational> c(p.coeffs());
  int n = p.degree();
  for (int i = 0; i <= n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
  return Poly(std::move(c));
}

inline Poly reverse_coeffs(const Poly& p, int n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (int i = 0; i <= p.degree(); ++i) c[n - i] = p[i];
  return Poly(std::move(c));
}

inline Poly affine_sub(const Poly& p, const Rational& a, const Rational& b) {
  Poly acc;
  Poly lin({a, b - a});
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * lin + Poly::constant(p[i]);
  return acc;
}

inline int descartes_variations_01(const Poly& p) {
  int n = p.degree();
  return taylor_shift_one(reverse_coeffs(p, n)).coefficient_sign_variations();
}

inline int descartes_count(const Poly& q, const Rational& lo,
                           const Rational& hi) {
  Poly unit = affine_sub(q, lo, hi);
  int v = descartes_variations_01(unit);
  if (v == 0) return 0;
  if (v == 1) return 1;
  Rational mid = (lo + hi) / 2;
  int at_mid = q.sign_at(mid) == 0 ? 1 : 0;
  return descartes_count(q, lo, mid) + at_mid + descartes_count(q, mid, hi);
}

// Distinct real roots of p over the whole line.
inline int descartes_oracle_count(const Poly& p) {
  Poly q = p.square_free_part();
  if (q.degree() <= 0) return 0;
  Rational b = q.root_bound();
  int endpoints = (q.sign_at(b) == 0 ? 1 : 0) + (q.sign_at(-b) == 0 ? 1 : 0);
  return descartes_count(q, -b, b) + endpoints;
}

}  // namespace vortex::testing

#endif
