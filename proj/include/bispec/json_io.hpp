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

#include <json.hpp>

#include "bispec/adcond.hpp"
#include "bispec/constraints.hpp"
#include "bispec/recursion.hpp"

namespace bispec {

using Json = nlohmann::ordered_json;

/// Array of "num/den" strings, lowest degree first.
Json to_json(const Polynomial& p);

/// {"lowOrder", "truncOrder", "coeffs"}.
Json to_json(const TruncatedSeries& s);

/// {"num": [...], "den": [...]}.
Json to_json(const RationalFunction& f);

/// {"order", "coeffs": [{"num", "den"}...]}.
Json to_json(const DiffOperator& op);

/// {"family", "theta", "nRange", "results": [{"n", "isZero", "validOrder"}]}.
Json to_json(const RecursionReport& r);

/// {"seeds", "constraints": [{"lhs", "rhs"}]}.
Json to_json(const ConstraintSet& c);

/// {"name", "thetaDegree", "powers", "coefficients", "residualIsZero",
///  "residualOrder"}.
Json ad_check_to_json(const AdIdentity& id, const DiffOperator& residual);

}  // namespace bispec
