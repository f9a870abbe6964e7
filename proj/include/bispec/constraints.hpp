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

#include "bispec/linalg.hpp"
#include "bispec/recursion.hpp"

namespace bispec {

/// Reduced linear relations among a family's free seeds. Rows are in reduced
/// row-echelon form over the column order listed in seed_names (alpha seeds
/// first, then beta seeds), so equal systems compare equal structurally.
struct ConstraintSet {
  std::vector<std::string> seed_names;
  std::vector<RationalRow> rows;

  int rank() const { return static_cast<int>(rows.size()); }
  bool empty() const { return rows.empty(); }

  friend bool operator==(const ConstraintSet& a, const ConstraintSet& b) {
    return a.seed_names == b.seed_names && a.rows == b.rows;
  }
  friend bool operator!=(const ConstraintSet& a, const ConstraintSet& b) { return !(a == b); }

  /// Each row solved for its last participating seed: "beta~4 = -8*alpha~1".
  std::string render() const;
};

/// Seed symbols per family: hermite (a0, b0); one-gap (alpha~0..1, beta~0..3);
/// two-gap (alpha~0..2, beta~0..5).
std::vector<std::string> family_seed_names(FamilyId f);

/// Family member as a seed-linear combination: one coefficient series per
/// seed, all certified through x^trunc. Negative indices give the zero
/// combination. The alpha_n/beta_n chains are folded into the coefficients.
std::vector<TruncatedSeries> seed_linear_member(FamilyId f, int n, int trunc);

/// Imposes recursion-residual vanishing for every n in [n_begin, n_end],
/// treating the seeds as unknowns, and returns the reduced system. Residuals
/// are linear in the seeds, so the system is exact. Throws ConstraintRankError
/// if the system pins every seed to zero (that would contradict the families'
/// construction and signals a transcription bug).
ConstraintSet solve_free_params(FamilyId f, const NRecursion& rec, int n_begin, int n_end,
                                int trunc);

/// The constraint set built from explicit rows (for frozen expectations in
/// tests); rows are reduced to canonical form.
ConstraintSet make_constraint_set(FamilyId f, std::vector<RationalRow> raw_rows);

}  // namespace bispec
