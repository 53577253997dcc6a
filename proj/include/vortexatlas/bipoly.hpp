// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VORTEXATLAS_BIPOLY_HPP
#define VORTEXATLAS_BIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vortexatlas/polynomial.hpp"

namespace vortex {

// Sparse bivariate polynomial over the rationals.  Variables are indexed
// 0 and 1; exponent pairs with zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (deg in var 0, deg in var 1)

  BiPoly() = default;
  static BiPoly constant(const Rational& c);
  static BiPoly variable(int var);  // var 0 or 1
  static BiPoly term(const Rational& c, int e0, int e1);

  void add_term(const Rational& c, int e0, int e1);

  bool is_zero() const { return terms_.empty(); }
  int degree(int var) const;
  const std::map<Key, Rational>& terms() const { return terms_; }

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rational& s) const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  BiPoly pow(int n) const;
  BiPoly derivative(int var) const;

  // Coefficients of powers of `var`, each a univariate Poly in the other
  // variable, ascending.
  std::vector<Poly> coefficients_in(int var) const;
  // Substitute a rational value for `var`; result is univariate in the
  // other variable.
  Poly substitute(int var, const Rational& value) const;
  double eval_double(double x0, double x1) const;

  // Exact division when the divisor's leading coefficient in `main_var`
  // is a nonzero constant; returns nullopt when not divisible.
  std::optional<BiPoly> divide_exact_in(int main_var,
                                        const BiPoly& divisor) const;

  // Divides out the integer content and denominators; leading-term sign
  // (in lexicographic order) preserved.
  BiPoly primitive_part() const;

  std::string to_string(const std::string& v0 = "x",
                        const std::string& v1 = "y") const;

 private:
  std::map<Key, Rational> terms_;
};

// Sylvester resultant eliminating `var`; exact, via rational-point
// interpolation of the specialized determinants.  Both inputs must have
// positive degree in the eliminated variable.
Poly resultant(const BiPoly& f, const BiPoly& g, int var);

// Exact determinant of a square rational matrix (fraction-free Bareiss).
Rational determinant(std::vector<std::vector<Rational>> m);

// Exact Lagrange interpolation through (x_i, y_i) with distinct x_i.
Poly interpolate(const std::vector<Rational>& xs,
                 const std::vector<Rational>& ys);

}  // namespace vortex

#endif
