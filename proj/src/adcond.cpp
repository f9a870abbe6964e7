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

#include "bispec/adcond.hpp"

#include <algorithm>

namespace bispec {

DiffOperator ad_identity_residual(const AdIdentity& id) {
  const DiffOperator theta_mul = DiffOperator::mul(RationalFunction(id.theta));
  int max_power = 0;
  for (const auto& [power, coeff] : id.terms) max_power = std::max(max_power, power);
  DiffOperator residual;
  DiffOperator ad = theta_mul;  // (ad op)^k (Theta·), k = 0 upward
  for (int k = 0; k <= max_power; ++k) {
    for (const auto& [power, coeff] : id.terms)
      if (power == k && !coeff.is_zero()) residual = residual + ad * coeff;
    if (k < max_power) ad = commutator(id.op, ad);
  }
  return residual;
}

std::vector<std::pair<AdIdentity, bool>> builtin_ad_suite() {
  // Thetas are written out literally; that they match the recursion-side
  // thetas is itself a verified cross-check.
  const Polynomial theta_h = Polynomial::variable();
  const Polynomial theta_1{Rational(0), Rational(0), Rational(1, 2)};              // x^2/2
  const Polynomial theta_2{Rational(0), Rational(-1), Rational(0), Rational(2, 3)};  // 2x^3/3 - x
  std::vector<std::pair<AdIdentity, bool>> suite;
  suite.push_back({AdIdentity{"hermite ad^3 - 4 ad", family_operator(FamilyId::Hermite), theta_h,
                              {{3, Rational(1)}, {1, Rational(-4)}}},
                   true});
  suite.push_back({AdIdentity{"one-gap ad^4 - 16 ad^2", family_operator(FamilyId::OneGap),
                              theta_1,
                              {{4, Rational(1)}, {2, Rational(-16)}}},
                   true});
  suite.push_back({AdIdentity{"one-gap ad^2 - 16 ad^0 (stronger candidate)",
                              family_operator(FamilyId::OneGap), theta_1,
                              {{2, Rational(1)}, {0, Rational(-16)}}},
                   false});
  suite.push_back({AdIdentity{"two-gap ad^4 - 40 ad^2 + 144 ad^0",
                              family_operator(FamilyId::TwoGap), theta_2,
                              {{4, Rational(1)}, {2, Rational(-40)}, {0, Rational(144)}}},
                   true});
  return suite;
}

}  // namespace bispec
