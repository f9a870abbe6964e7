// Copyright 2026 The bispec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "bispec/lcg.hpp"
#include "bispec/rational.hpp"

using namespace bispec;

TEST_SUITE("exact-core") {

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 4) * Rational(4, 3) == Rational(1));
  CHECK_THROWS_AS(Rational(1, 6) / Rational(0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
}

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(1, -2).numerator() == -1);
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(-6, -4) == Rational(3, 2));
}

TEST_CASE("string round trips") {
  CHECK(Rational(5, 6).to_string() == "5/6");
  CHECK(Rational(-7).to_string() == "-7");
  CHECK(Rational::from_string("5/6") == Rational(5, 6));
  CHECK(Rational::from_string("-12") == Rational(-12));
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational::from_string("x/2"), Error);
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(-1, 3).abs() == Rational(1, 3));
  CHECK(Rational(2, 5).reciprocal() == Rational(5, 2));
  CHECK_THROWS_AS(Rational(0).reciprocal(), DivisionByZeroError);
}

TEST_CASE("ring axioms on seeded draws") {
  Lcg lcg(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = lcg.next_rational(), b = lcg.next_rational(), c = lcg.next_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("factorial conventions") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

}  // TEST_SUITE
