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

#include "bispec/constraints.hpp"

#include <algorithm>
#include <sstream>

namespace bispec {

std::vector<std::string> family_seed_names(FamilyId f) {
  switch (f) {
    case FamilyId::Hermite:
      return {"a0", "b0"};
    case FamilyId::OneGap:
      return {"alpha~0", "alpha~1", "beta~0", "beta~1", "beta~2", "beta~3"};
    case FamilyId::TwoGap:
      return {"alpha~0", "alpha~1", "alpha~2",
              "beta~0",  "beta~1",  "beta~2", "beta~3", "beta~4", "beta~5"};
  }
  throw Error("unknown family");
}

namespace {

struct SeedIndex {
  size_t index;
  Rational multiplier;
};

// alpha_n / beta_n written as multiplier * seed; the chains bottom out in the
// seeds listed by family_seed_names.
SeedIndex alpha_chain(FamilyId f, int n) {
  const int n_seeds = (f == FamilyId::OneGap) ? 2 : 3;
  if (n < n_seeds) return {static_cast<size_t>(n), Rational(1)};
  SeedIndex lower = alpha_chain(f, n - 2);
  lower.multiplier *= Rational(-2 * (n - 1));
  return lower;
}

SeedIndex beta_chain(FamilyId f, int n) {
  const size_t alpha_count = (f == FamilyId::OneGap) ? 2 : 3;
  const int n_seeds = (f == FamilyId::OneGap) ? 4 : 6;
  if (n < n_seeds) return {alpha_count + static_cast<size_t>(n), Rational(1)};
  SeedIndex lower = beta_chain(f, n - 2);
  const long ln = n;
  lower.multiplier *= (f == FamilyId::OneGap) ? Rational(-2 * (ln - 1) * ln, ln - 3)
                                              : Rational(-2 * (ln - 3) * (ln - 2), ln - 5);
  return lower;
}

}  // namespace

std::vector<TruncatedSeries> seed_linear_member(FamilyId f, int n, int trunc) {
  const size_t width = family_seed_names(f).size();
  std::vector<TruncatedSeries> comps(width, TruncatedSeries::zero(trunc));
  if (n < 0) return comps;
  if (f == FamilyId::Hermite) {
    comps[0] = TruncatedSeries::from_polynomial(hermite_poly(n), trunc);
    comps[1] = psi_family(n, trunc);
    return comps;
  }
  const SeedIndex a = alpha_chain(f, n);
  const SeedIndex b = beta_chain(f, n);
  comps[a.index] = family_even_basis(f, n, trunc) * a.multiplier;
  comps[b.index] = comps[b.index] + family_odd_basis(f, n, trunc) * b.multiplier;
  return comps;
}

ConstraintSet solve_free_params(FamilyId f, const NRecursion& rec, int n_begin, int n_end,
                                int trunc) {
  const std::vector<std::string> names = family_seed_names(f);
  const int width = static_cast<int>(names.size());
  std::vector<RationalRow> rows;

  for (int n = n_begin; n <= n_end; ++n) {
    // residual_n = sum_j c_j(n) member_{n+j} - Theta member_n, per seed
    std::vector<TruncatedSeries> residual = seed_linear_member(f, n, trunc);
    const TruncatedSeries theta = TruncatedSeries::from_polynomial(
        rec.theta, trunc + rec.theta.degree());
    for (auto& comp : residual) comp = -(theta * comp);
    for (const auto& term : rec.terms) {
      const Rational c = eval_coeff_of_n(term.coeff_of_n, n);
      if (c.is_zero()) continue;
      const std::vector<TruncatedSeries> member = seed_linear_member(f, n + term.offset, trunc);
      for (int s = 0; s < width; ++s)
        residual[static_cast<size_t>(s)] = residual[static_cast<size_t>(s)] +
                                           member[static_cast<size_t>(s)] * c;
    }
    // one linear equation on the seeds per certified x-power
    int low = residual[0].low_order(), high = residual[0].trunc_order();
    for (const auto& comp : residual) {
      low = std::min(low, comp.low_order());
      high = std::min(high, comp.trunc_order());
    }
    for (int e = low; e <= high; ++e) {
      RationalRow row(static_cast<size_t>(width));
      bool nonzero = false;
      for (int s = 0; s < width; ++s) {
        row[static_cast<size_t>(s)] = residual[static_cast<size_t>(s)].coeff(e);
        nonzero = nonzero || !row[static_cast<size_t>(s)].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  reduced_row_echelon(rows, width);
  if (static_cast<int>(rows.size()) == width)
    throw ConstraintRankError("constraint system forces every seed to zero");
  return ConstraintSet{names, std::move(rows)};
}

ConstraintSet make_constraint_set(FamilyId f, std::vector<RationalRow> raw_rows) {
  const std::vector<std::string> names = family_seed_names(f);
  reduced_row_echelon(raw_rows, static_cast<int>(names.size()));
  return ConstraintSet{names, std::move(raw_rows)};
}

std::string ConstraintSet::render() const {
  if (rows.empty()) return "no constraints";
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out << " ; ";
    int last = -1;
    for (size_t c = 0; c < rows[r].size(); ++c)
      if (!rows[r][c].is_zero()) last = static_cast<int>(c);
    // solve the row for its last participating seed
    const Rational lead = rows[r][static_cast<size_t>(last)];
    out << seed_names[static_cast<size_t>(last)] << " = ";
    bool any = false;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (static_cast<int>(c) == last || rows[r][c].is_zero()) continue;
      const Rational coeff = -rows[r][c] / lead;
      if (any) out << (coeff.sign() < 0 ? " - " : " + ");
      else if (coeff.sign() < 0) out << "-";
      const Rational mag = coeff.abs();
      if (!mag.is_one()) out << mag.to_string() << "*";
      out << seed_names[c];
      any = true;
    }
    if (!any) out << "0";
  }
  return out.str();
}

}  // namespace bispec
