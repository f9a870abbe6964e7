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

#include <vector>

#include "bispec/rational.hpp"

namespace bispec {

using RationalRow = std::vector<Rational>;

/// Gauss-Jordan reduction over the rationals. Rows end up in reduced
/// row-echelon form with zero rows dropped; returns the pivot columns in
/// increasing order. Deterministic: first nonzero pivot, columns scanned
/// left to right.
std::vector<int> reduced_row_echelon(std::vector<RationalRow>& rows, int cols);

int matrix_rank(std::vector<RationalRow> rows, int cols);

/// Basis of {x : M x = 0} from the RREF: one vector per free column, the
/// free coordinate set to 1, in increasing free-column order.
std::vector<RationalRow> kernel_basis(std::vector<RationalRow> rows, int cols);

/// True when v is a rational linear combination of the given rows.
bool in_row_span(const std::vector<RationalRow>& rows, const RationalRow& v, int cols);

}  // namespace bispec
