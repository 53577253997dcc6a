// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vortexatlas/polynomial.hpp"

using namespace vortex;

TEST_CASE("rational parsing") {
  CHECK(*parse_rational("3/4") == rat(3, 4));
  CHECK(*parse_rational("-6/4") == rat(-3, 2));
  CHECK(*parse_rational("7") == rat(7));
  CHECK(*parse_rational("0.125") == rat(1, 8));
  CHECK(*parse_rational("-2.5") == rat(-5, 2));
  CHECK(*parse_rational("-0.5") == rat(-1, 2));
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("abc").has_value());
}

TEST_CASE("arithmetic and evaluation") {
  Poly p({rat(-2), rat(0), rat(1)});  // x^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(rat(3)) == rat(7));
  CHECK(p.eval_double(1.5) == doctest::Approx(0.25));

  Poly q({rat(1), rat(1)});  // x + 1
  CHECK((p * q).degree() == 3);
  CHECK((p + q).eval(rat(2)) == rat(5));
  CHECK((p - p).is_zero());

  Poly d = p.derivative();
  CHECK(d == Poly({rat(0), rat(2)}));
}

TEST_CASE("division and gcd") {
  Poly p({rat(-2), rat(0), rat(1)});
  Poly q({rat(1), rat(1)});
  auto [quot, rem] = p.divmod(q);
  CHECK((quot * q + rem) == p);
  CHECK(rem.degree() < q.degree());

  // gcd((x-1)^2 (x+3), (x-1)(x+5)) = x - 1
  Poly x1({rat(-1), rat(1)});
  Poly a = x1 * x1 * Poly({rat(3), rat(1)});
  Poly b = x1 * Poly({rat(5), rat(1)});
  CHECK(Poly::gcd(a, b) == x1);

  CHECK(a.square_free_part() == (x1 * Poly({rat(3), rat(1)})).primitive_part());
}

TEST_CASE("root bound brackets all roots") {
  Poly p({rat(-6), rat(11), rat(-6), rat(1)});  // (x-1)(x-2)(x-3)
  Rational b = p.root_bound();
  CHECK(b > 3);
  CHECK(p.sign_at(b) != 0);
}

TEST_CASE("printing") {
  Poly p({rat(-2), rat(0), rat(1)});
  CHECK(p.to_string() == "x^2 - 2");
  CHECK(Poly().to_string() == "0");
}
