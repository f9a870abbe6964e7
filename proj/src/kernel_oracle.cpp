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

#include "bispec/kernel_oracle.hpp"

#include <algorithm>
#include <string>

namespace bispec {

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  const Polynomial g = Polynomial::gcd(a, b);
  return (a * b).exact_div(g);
}

// i (i-1) ... (i-k+1) as a Rational
Rational falling_factorial(int i, int k) {
  mpz_class r = 1;
  for (int j = 0; j < k; ++j) r *= (i - j);
  return Rational(r);
}

}  // namespace

std::vector<TruncatedSeries> series_kernel_oracle(const DiffOperator& a, const Rational& lambda,
                                                  int taylor_order,
                                                  std::optional<int> expected_dim) {
  const int n = taylor_order;
  const DiffOperator m0 = a - DiffOperator::identity() * lambda;

  // clear denominators on the left; the kernel is unchanged
  Polynomial lcd = Polynomial::one();
  for (int k = 0; k <= m0.order(); ++k)
    if (!m0.coeff(k).is_zero()) lcd = poly_lcm(lcd, m0.coeff(k).den());
  std::vector<Polynomial> pk(static_cast<size_t>(m0.order()) + 1);
  int max_shift = 0;
  for (int k = 0; k <= m0.order(); ++k) {
    const RationalFunction cleared = m0.coeff(k) * RationalFunction(lcd);
    if (!cleared.is_polynomial()) throw Error("denominator clearing failed");
    pk[static_cast<size_t>(k)] = cleared.to_polynomial();
    for (int j = 0; j <= pk[static_cast<size_t>(k)].degree(); ++j)
      if (!pk[static_cast<size_t>(k)].coeff(j).is_zero())
        max_shift = std::max(max_shift, k - j);
  }

  // row r of M c = 0 is exact only while it touches no coefficient beyond c_N
  const int r_max = n - max_shift;
  if (r_max < 0) throw ValidOrderError("taylor window too small for the kernel oracle");
  std::vector<RationalRow> rows(static_cast<size_t>(r_max) + 1,
                                RationalRow(static_cast<size_t>(n) + 1));
  for (int k = 0; k <= m0.order(); ++k) {
    const Polynomial& p = pk[static_cast<size_t>(k)];
    for (int j = 0; j <= p.degree(); ++j) {
      if (p.coeff(j).is_zero()) continue;
      for (int i = k; i <= n; ++i) {
        const int r = i + j - k;
        if (r < 0 || r > r_max) continue;
        rows[static_cast<size_t>(r)][static_cast<size_t>(i)] +=
            p.coeff(j) * falling_factorial(i, k);
      }
    }
  }

  std::vector<RationalRow> basis = kernel_basis(std::move(rows), n + 1);
  if (expected_dim.has_value() && static_cast<int>(basis.size()) != *expected_dim)
    throw KernelDimensionError("kernel dimension " + std::to_string(basis.size()) +
                               ", expected " + std::to_string(*expected_dim));
  std::vector<TruncatedSeries> out;
  out.reserve(basis.size());
  for (auto& v : basis) out.emplace_back(0, n, std::move(v));
  return out;
}

bool kernel_contains(const std::vector<TruncatedSeries>& basis, const TruncatedSeries& candidate,
                     int taylor_order) {
  std::vector<RationalRow> rows;
  rows.reserve(basis.size());
  for (const auto& b : basis) {
    RationalRow r(static_cast<size_t>(taylor_order) + 1);
    for (int i = 0; i <= taylor_order; ++i) r[static_cast<size_t>(i)] = b.coeff(i);
    rows.push_back(std::move(r));
  }
  RationalRow v(static_cast<size_t>(taylor_order) + 1);
  for (int i = 0; i <= taylor_order; ++i) v[static_cast<size_t>(i)] = candidate.coeff(i);
  return in_row_span(rows, v, taylor_order + 1);
}

}  // namespace bispec
