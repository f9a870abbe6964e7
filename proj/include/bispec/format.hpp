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

#include "bispec/diff_operator.hpp"

namespace bispec {

/// "320x^6 - 1440x^4 + 720x^2 + 120" — descending degree, paper style.
std::string to_string(const Polynomial& p, const std::string& var = "x");

/// "x + (1/3)x^3 + (1/10)x^5" — ascending exponent; non-integer coefficients
/// are parenthesized.
std::string to_string(const TruncatedSeries& s, const std::string& var = "x");

/// "(4x^3 + 6x)/(2x^2 - 1)", or plain polynomial form when the denominator is
/// constant.
std::string to_string(const RationalFunction& f, const std::string& var = "x");

/// "∂^2 - 2x∂" style rendering for logs.
std::string to_string(const DiffOperator& op, const std::string& var = "x");

}  // namespace bispec
