// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VORTEXATLAS_POLYNOMIAL_HPP
#define VORTEXATLAS_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "vortexatlas/rational.hpp"

namespace vortex {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree order.  The zero polynomial has an empty coefficient list; any
// other polynomial keeps a nonzero leading coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  Poly(std::initializer_list<Rational> coeffs)
      : c_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static Poly constant(const Rational& c) { return Poly({c}); }
  // x^k with a given coefficient.
  static Poly monomial(const Rational& c, int k);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& operator[](int i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;
  int sign_at(const Rational& x) const { return sign(eval(x)); }
  // Sign of the value as x -> +/- infinity.
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  Poly derivative() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly operator/(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  // Exact division; throws if the remainder is nonzero.
  Poly divide_exact(const Poly& d) const;

  // Monic gcd.
  static Poly gcd(const Poly& a, const Poly& b);
  // p / gcd(p, p'), normalized to a primitive integer-coefficient form.
  Poly square_free_part() const;
  // Clears denominators and divides by content; sign of the leading
  // coefficient is preserved.
  Poly primitive_part() const;

  // Strict upper bound on the absolute value of every root (Cauchy).
  Rational root_bound() const;

  // Number of sign changes in the coefficient sequence (Descartes).
  int coefficient_sign_variations() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Evaluation cache for repeated double-precision evaluation.
std::vector<double> to_double_coeffs(const Poly& p);
double eval_double_coeffs(const std::vector<double>& c, double x);

}  // namespace vortex

#endif
