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

#include <optional>

#include "bispec/diff_operator.hpp"
#include "bispec/linalg.hpp"

namespace bispec {

/// Independent route to the eigenfunction spaces: clears denominators of
/// (A - lambda), assembles the exact linear map on Taylor coefficient vectors
/// (c_0..c_N), and returns a basis of the kernel restricted to the rows the
/// truncation certifies. Kernel vectors come back as series certified through
/// x^N, in deterministic reduced-echelon normalization.
///
/// When expected_dim is set, a mismatch throws KernelDimensionError; the
/// operators studied here all have two-dimensional solution spaces at x = 0.
std::vector<TruncatedSeries> series_kernel_oracle(const DiffOperator& a, const Rational& lambda,
                                                  int taylor_order,
                                                  std::optional<int> expected_dim = 2);

/// Membership of a Taylor-coefficient vector in the span of the oracle basis,
/// decided by an exact rank comparison.
bool kernel_contains(const std::vector<TruncatedSeries>& basis, const TruncatedSeries& candidate,
                     int taylor_order);

}  // namespace bispec
