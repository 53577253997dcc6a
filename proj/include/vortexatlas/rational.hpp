// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VORTEXATLAS_RATIONAL_HPP
#define VORTEXATLAS_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace vortex {

// Exact arbitrary-precision rational.  Canonical form (reduced, positive
// denominator) is maintained by GMP as long as values are built through
// the helpers below or through arithmetic operators.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_val(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Parses "p/q", an integer, or a decimal literal.  Decimals expand by
// digits ("0.125" -> 125/1000), never through a float round-trip.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// +/-infinity-capable endpoint for root counting ranges.
struct ExtendedRational {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static ExtendedRational neg_inf() { return {Kind::NegInf, Rational()}; }
  static ExtendedRational pos_inf() { return {Kind::PosInf, Rational()}; }
  static ExtendedRational finite(Rational v) {
    return {Kind::Finite, std::move(v)};
  }
  bool is_finite() const { return kind == Kind::Finite; }
};

}  // namespace vortex

#endif
