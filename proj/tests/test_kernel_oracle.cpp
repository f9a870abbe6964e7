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

#include "bispec/kernel_oracle.hpp"
#include "bispec/families.hpp"

using namespace bispec;

TEST_SUITE("bispectral") {

TEST_CASE("one-gap kernel at lambda = -4 matches the n = 2 closed forms") {
  const int order = 20;
  const auto basis =
      series_kernel_oracle(family_operator(FamilyId::OneGap), Rational(-4), order);
  REQUIRE(basis.size() == 2);
  const TruncatedSeries even = family_even_basis(FamilyId::OneGap, 2, order);  // 1 + 2x^2
  const TruncatedSeries odd = family_odd_basis(FamilyId::OneGap, 2, order);    // x^3 + x^5/5 + ...
  CHECK(even.coeff(2) == Rational(2));
  CHECK(even.coeff(4).is_zero());
  CHECK(odd.coeff(5) == Rational(1, 5));
  CHECK(kernel_contains(basis, even, order));
  CHECK(kernel_contains(basis, odd, order));
  // something outside the eigenspace is rejected
  CHECK_FALSE(kernel_contains(basis, TruncatedSeries::from_polynomial(hermite_poly(2), order),
                              order));
}

TEST_CASE("hermite kernel at lambda = 0 holds 1 and psi_0") {
  const int order = 10;
  const auto basis = series_kernel_oracle(family_operator(FamilyId::Hermite), Rational(0), order);
  REQUIRE(basis.size() == 2);
  CHECK(kernel_contains(basis, TruncatedSeries::monomial(0, Rational(1), order), order));
  CHECK(kernel_contains(basis, psi_family(0, order), order));
}

TEST_CASE("hermite kernel at lambda = -2 holds H_1 up to scalar") {
  const int order = 10;
  const auto basis = series_kernel_oracle(family_operator(FamilyId::Hermite), Rational(-2), order);
  CHECK(kernel_contains(basis, TruncatedSeries::from_polynomial(hermite_poly(1), order), order));
}

TEST_CASE("deterministic echelon normalization") {
  const int order = 12;
  const auto a = series_kernel_oracle(family_operator(FamilyId::Hermite), Rational(0), order);
  const auto b = series_kernel_oracle(family_operator(FamilyId::Hermite), Rational(0), order);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  // free coordinates c_0 and c_1 give leading ones in order
  CHECK(a[0].coeff(0) == Rational(1));
  CHECK(a[0].coeff(1).is_zero());
  CHECK(a[1].coeff(1) == Rational(1));
  CHECK(a[1].coeff(0).is_zero());
}

TEST_CASE("unexpected dimension throws") {
  // d - 1 has the one-dimensional kernel spanned by e^x
  const DiffOperator d_minus_1({RationalFunction(Rational(-1)), RationalFunction::one()});
  CHECK_THROWS_AS(series_kernel_oracle(d_minus_1, Rational(0), 12), KernelDimensionError);
  const auto basis = series_kernel_oracle(d_minus_1, Rational(0), 12, std::nullopt);
  REQUIRE(basis.size() == 1);
  for (int k = 0; k <= 12; ++k)
    CHECK(basis[0].coeff(k) == Rational(mpz_class(1), factorial(k)));
}

TEST_CASE("two-gap kernels across n") {
  const int order = 24;
  for (int n = 0; n <= 6; ++n) {
    const auto basis =
        series_kernel_oracle(family_operator(FamilyId::TwoGap), Rational(-2 * n), order);
    REQUIRE(basis.size() == 2);
    CHECK(kernel_contains(basis, family_even_basis(FamilyId::TwoGap, n, order), order));
    CHECK(kernel_contains(basis, family_odd_basis(FamilyId::TwoGap, n, order), order));
  }
}

}  // TEST_SUITE
