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

#include "bispec/recursion.hpp"

using namespace bispec;

namespace {

Polynomial eigenpoly(FamilyId f, int n) {
  if (n < 0) return Polynomial::zero();
  return f == FamilyId::Hermite ? hermite_poly(n) : wronskian_eigen_poly(f, n);
}

}  // namespace

TEST_SUITE("bispectral") {

TEST_CASE("builtin recursion shapes") {
  const NRecursion h = builtin_recursion(FamilyId::Hermite);
  CHECK(h.terms.size() == 2);
  CHECK(h.terms[0].offset == 1);
  CHECK(h.terms[1].offset == -1);
  CHECK(h.theta == Polynomial::variable());

  const NRecursion one = builtin_recursion(FamilyId::OneGap);
  CHECK(one.terms.size() == 3);
  CHECK(one.terms[0].offset == -2);
  CHECK(one.terms[1].offset == 0);
  CHECK(one.terms[2].offset == 2);
  CHECK(one.theta == Polynomial{Rational(0), Rational(0), Rational(1, 2)});

  const NRecursion two = builtin_recursion(FamilyId::TwoGap);
  CHECK(two.terms.size() == 4);
  CHECK(two.terms[0].offset == -3);
  CHECK(two.terms[1].offset == -1);
  CHECK(two.terms[2].offset == 1);
  CHECK(two.terms[3].offset == 3);
  CHECK(two.theta == Polynomial{Rational(0), Rational(-1), Rational(0), Rational(2, 3)});

  // spot coefficient values
  CHECK(eval_coeff_of_n(one.terms[0].coeff_of_n, 2) == Rational(1));        // n(n-1)/2
  CHECK(eval_coeff_of_n(one.terms[1].coeff_of_n, 2) == Rational(3, 4));     // (2n-1)/4
  CHECK(eval_coeff_of_n(one.terms[2].coeff_of_n, 2) == Rational(1, 24));    // (n-1)/(8(n+1))
  CHECK(eval_coeff_of_n(two.terms[0].coeff_of_n, 5) == Rational(16));       // (2/3)(n-1)(n-2)(n-3)
  CHECK(eval_coeff_of_n(two.terms[3].coeff_of_n, 1) == Rational(-1, 6));    // (n-3)/(12n)
}

TEST_CASE("one-gap row at n = 2, both sides written out") {
  const Polynomial p0 = eigenpoly(FamilyId::OneGap, 0);
  const Polynomial p2 = eigenpoly(FamilyId::OneGap, 2);
  const Polynomial p4 = eigenpoly(FamilyId::OneGap, 4);
  const Polynomial lhs = p0 + p2 * Rational(3, 4) + p4 * Rational(1, 24);
  const Polynomial rhs = Polynomial{Rational(0), Rational(0), Rational(1, 2)} * p2;
  const Polynomial both{Rational(0), Rational(0), Rational(1), Rational(0), Rational(2)};
  CHECK(lhs == both);  // 2x^4 + x^2
  CHECK(rhs == both);
}

TEST_CASE("two-gap row at n = 1, both sides written out") {
  const Polynomial q1 = eigenpoly(FamilyId::TwoGap, 1);
  const Polynomial q2 = eigenpoly(FamilyId::TwoGap, 2);
  const Polynomial q4 = eigenpoly(FamilyId::TwoGap, 4);
  // (n-3)(n-1) vanishes at n = 1; remaining terms: -q_2 - (1/6) q_4
  const Polynomial lhs = -q2 - q4 * Rational(1, 6);
  const Polynomial rhs = Polynomial{Rational(0), Rational(-1), Rational(0), Rational(2, 3)} * q1;
  const Polynomial both{Rational(0), Rational(0), Rational(8), Rational(0), Rational(-16, 3)};
  CHECK(lhs == both);  // 8x^2 - 16x^4/3
  CHECK(rhs == both);
}

TEST_CASE("polynomial recursions hold on [1, 12]") {
  for (FamilyId f : {FamilyId::Hermite, FamilyId::OneGap, FamilyId::TwoGap}) {
    const RecursionReport report = check_recursion_poly(
        builtin_recursion(f), [&](int n) { return eigenpoly(f, n); }, 1, 12, family_name(f));
    CHECK(report.all_zero());
    CHECK(report.per_n.size() == 12);
  }
}

TEST_CASE("zero rows are zero") {
  // n = 1 in the one-gap relation: p_1 = 0 and every coefficient kills its term
  const RecursionReport report = check_recursion_poly(
      builtin_recursion(FamilyId::OneGap), [&](int n) { return eigenpoly(FamilyId::OneGap, n); },
      1, 1, "one-gap");
  CHECK(report.all_zero());
}

TEST_CASE("coefficient pole on the range") {
  // the two-gap (n-3)/(12n) coefficient has a pole at n = 0
  CHECK_THROWS_AS(check_recursion_poly(builtin_recursion(FamilyId::TwoGap),
                                       [&](int n) { return eigenpoly(FamilyId::TwoGap, n); }, 0,
                                       2, "two-gap"),
                  PoleError);
}

TEST_CASE("series recursion for the psi bundle") {
  const int order = 40;
  const NRecursion rec = builtin_recursion(FamilyId::Hermite);
  SUBCASE("pure psi") {
    const RecursionReport report = check_recursion_series(
        rec, [&](int n) { return psi_family(n, order); }, 1, 6, "psi");
    CHECK(report.all_zero());
    for (const auto& c : report.per_n) CHECK(c.valid_order >= order - 2);
  }
  SUBCASE("pure Hermite embeds the classical three-term relation") {
    const RecursionReport report = check_recursion_series(
        rec, [&](int n) { return TruncatedSeries::from_polynomial(hermite_poly(n), order); }, 1, 6,
        "hermite polynomials as series");
    CHECK(report.all_zero());
  }
  SUBCASE("the relation genuinely fails at n = 0") {
    const RecursionReport report = check_recursion_series(
        rec, [&](int n) { return psi_family(n, order); }, 0, 0, "psi at n=0");
    CHECK_FALSE(report.all_zero());
  }
}

TEST_CASE("negative indices enter as zero") {
  // n = 2 one-gap row touches p_0 only through offset -2; n = 1 touches p_{-1}
  const RecursionReport report = check_recursion_poly(
      builtin_recursion(FamilyId::OneGap),
      [&](int n) {
        REQUIRE(n >= 0);  // the checker must clamp negatives itself
        return eigenpoly(FamilyId::OneGap, n);
      },
      1, 3, "one-gap");
  CHECK(report.all_zero());
}

}  // TEST_SUITE
