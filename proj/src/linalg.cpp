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

#include "bispec/linalg.hpp"

#include <algorithm>

namespace bispec {

std::vector<int> reduced_row_echelon(std::vector<RationalRow>& rows, int cols) {
  std::vector<int> pivots;
  size_t pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][static_cast<size_t>(col)].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    RationalRow& prow = rows[pivot_row];
    const Rational inv = prow[static_cast<size_t>(col)].reciprocal();
    for (int c = col; c < cols; ++c) prow[static_cast<size_t>(c)] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row) continue;
      const Rational factor = rows[r][static_cast<size_t>(col)];
      if (factor.is_zero()) continue;
      for (int c = col; c < cols; ++c)
        rows[r][static_cast<size_t>(c)] -= factor * prow[static_cast<size_t>(c)];
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivots.size());
  return pivots;
}

int matrix_rank(std::vector<RationalRow> rows, int cols) {
  return static_cast<int>(reduced_row_echelon(rows, cols).size());
}

std::vector<RationalRow> kernel_basis(std::vector<RationalRow> rows, int cols) {
  const std::vector<int> pivots = reduced_row_echelon(rows, cols);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<RationalRow> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    RationalRow v(static_cast<size_t>(cols));
    v[static_cast<size_t>(free)] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -rows[r][static_cast<size_t>(free)];
    // leading-one normalization on the first nonzero coordinate
    for (auto& x : v) {
      if (x.is_zero()) continue;
      const Rational inv = x.reciprocal();
      for (auto& y : v) y *= inv;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_span(const std::vector<RationalRow>& rows, const RationalRow& v, int cols) {
  std::vector<RationalRow> base = rows;
  const int r0 = matrix_rank(base, cols);
  base = rows;
  base.push_back(v);
  return matrix_rank(std::move(base), cols) == r0;
}

}  // namespace bispec
