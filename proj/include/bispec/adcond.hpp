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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bispec/families.hpp"

namespace bispec {

/// Candidate operator identity sum_k c_k (ad op)^k (Theta·) = 0, where power
/// zero means the operator of multiplication by Theta.
struct AdIdentity {
  std::string name;
  DiffOperator op;
  Polynomial theta;
  std::vector<std::pair<int, Rational>> terms;  // (power, coefficient)
};

/// The exact residual operator; the zero operator iff the identity holds.
DiffOperator ad_identity_residual(const AdIdentity& id);

/// The four built-in cases, in order: Hermite ad^3 - 4 ad; one-gap
/// ad^4 - 16 ad^2; the one-gap "stronger" candidate ad^2 - 16 ad^0 (expected
/// NONZERO); two-gap ad^4 - 40 ad^2 + 144 ad^0. The boolean is the expected
/// zero-ness of the residual.
std::vector<std::pair<AdIdentity, bool>> builtin_ad_suite();

}  // namespace bispec
