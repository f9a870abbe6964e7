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

#include "bispec/constraints.hpp"
#include "bispec/lcg.hpp"

using namespace bispec;

TEST_SUITE("bispectral") {

TEST_CASE("two-gap rows n in [6,8] recover the beta~/alpha~ constraints") {
  const ConstraintSet got = solve_free_params(FamilyId::TwoGap,
                                              builtin_recursion(FamilyId::TwoGap), 6, 8, 40);
  RationalRow r1(9), r2(9), r3(9);
  r1[6] = Rational(1);                       // beta~3 = 0
  r2[1] = Rational(8); r2[7] = Rational(1);  // beta~4 + 8 alpha~1 = 0
  r3[2] = Rational(24); r3[8] = Rational(1); // beta~5 + 24 alpha~2 = 0
  const ConstraintSet expected = make_constraint_set(FamilyId::TwoGap, {r1, r2, r3});
  CHECK(got == expected);
  CHECK(got.rank() == 3);
  CHECK(got.render() == "beta~4 = -8*alpha~1 ; beta~5 = -24*alpha~2 ; beta~3 = 0");
}

TEST_CASE("widening the two-gap window beyond 6 adds nothing") {
  const ConstraintSet narrow = solve_free_params(FamilyId::TwoGap,
                                                 builtin_recursion(FamilyId::TwoGap), 6, 8, 40);
  const ConstraintSet wide = solve_free_params(FamilyId::TwoGap,
                                               builtin_recursion(FamilyId::TwoGap), 6, 12, 40);
  CHECK(narrow == wide);
}

TEST_CASE("one-gap rows n in [4,20] leave all seeds free") {
  const ConstraintSet got = solve_free_params(FamilyId::OneGap,
                                              builtin_recursion(FamilyId::OneGap), 4, 20, 40);
  CHECK(got.empty());
  CHECK(got.render() == "no constraints");
}

TEST_CASE("hermite rows n in [1,10] leave a0, b0 free") {
  const ConstraintSet got = solve_free_params(FamilyId::Hermite,
                                              builtin_recursion(FamilyId::Hermite), 1, 10, 40);
  CHECK(got.empty());
}

TEST_CASE("two-gap rows n in [3,5] demand the stricter rank-6 system") {
  const ConstraintSet got = solve_free_params(FamilyId::TwoGap,
                                              builtin_recursion(FamilyId::TwoGap), 3, 5, 40);
  RationalRow r1(9), r2(9), r3(9), r4(9), r5(9), r6(9);
  r1[1] = Rational(1);
  r2[2] = Rational(1); r2[8] = Rational(1, 24);
  r3[4] = Rational(1); r3[8] = Rational(1, 12);
  r4[5] = Rational(1);
  r5[6] = Rational(1);
  r6[7] = Rational(1);
  CHECK(got == make_constraint_set(FamilyId::TwoGap, {r1, r2, r3, r4, r5, r6}));
}

TEST_CASE("one-gap rows n in [1,3] demand the stricter rank-3 system") {
  const ConstraintSet got = solve_free_params(FamilyId::OneGap,
                                              builtin_recursion(FamilyId::OneGap), 1, 3, 40);
  RationalRow r1(6), r2(6), r3(6);
  r1[1] = Rational(1);                          // alpha~1 = 0
  r2[2] = Rational(1); r2[4] = Rational(-1, 4); // beta~0 = beta~2 / 4
  r3[3] = Rational(1);                          // beta~1 = 0
  CHECK(got == make_constraint_set(FamilyId::OneGap, {r1, r2, r3}));
}

TEST_CASE("seed-linear members contract to concrete family members") {
  Lcg lcg(71);
  for (FamilyId f : {FamilyId::OneGap, FamilyId::TwoGap}) {
    FamilySeeds seeds;
    const size_t na = (f == FamilyId::OneGap) ? 2 : 3;
    const size_t nb = (f == FamilyId::OneGap) ? 4 : 6;
    for (size_t i = 0; i < na; ++i) seeds.alpha_seeds.push_back(lcg.next_rational());
    for (size_t i = 0; i < nb; ++i) seeds.beta_seeds.push_back(lcg.next_rational());
    const int order = 24;
    auto [alpha, beta] = family_parameter_chain(f, seeds, 9);
    for (int n = 0; n <= 9; ++n) {
      const auto comps = seed_linear_member(f, n, order);
      TruncatedSeries combined = TruncatedSeries::zero(order);
      for (size_t s = 0; s < comps.size(); ++s) {
        const Rational seed_value =
            s < na ? seeds.alpha_seeds[s] : seeds.beta_seeds[s - na];
        combined = combined + comps[s] * seed_value;
      }
      const TruncatedSeries direct =
          family_even_basis(f, n, order) * alpha[static_cast<size_t>(n)] +
          family_odd_basis(f, n, order) * beta[static_cast<size_t>(n)];
      CHECK(combined.agrees_with(direct));
    }
  }
}

TEST_CASE("hermite seed-linear members are H_n and psi_n") {
  const auto comps = seed_linear_member(FamilyId::Hermite, 3, 20);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].agrees_with(TruncatedSeries::from_polynomial(hermite_poly(3), 20)));
  CHECK(comps[1].agrees_with(psi_family(3, 20)));
}

TEST_CASE("constraint sets are order-insensitive in their input rows") {
  RationalRow a(6), b(6);
  a[0] = Rational(2); a[3] = Rational(1);
  b[1] = Rational(1); b[3] = Rational(-1);
  const ConstraintSet s1 = make_constraint_set(FamilyId::OneGap, {a, b});
  const ConstraintSet s2 = make_constraint_set(FamilyId::OneGap, {b, a});
  CHECK(s1 == s2);
}

}  // TEST_SUITE
