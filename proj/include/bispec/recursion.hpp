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

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "bispec/families.hpp"

namespace bispec {

/// Finite difference relation in the family index n:
///   sum_j c_j(n) f_{n+j} = Theta(x) f_n
/// with exact rational-function coefficients c_j of n.
struct NRecursion {
  struct Term {
    int offset;
    RationalFunction coeff_of_n;  // evaluated per n as a Rational
  };
  std::vector<Term> terms;
  Polynomial theta;
};

/// The three relations shipped with the families:
///   hermite:  (1/2) f_{n+1} + n f_{n-1} = x f_n           (2x folded as 2*Theta)
///   one-gap:  n(n-1)/2 p_{n-2} + (2n-1)/4 p_n + (n-1)/(8(n+1)) p_{n+2} = (x^2/2) p_n
///   two-gap:  (2/3)(n-1)(n-2)(n-3) q_{n-3} + (n-3)(n-1) q_{n-1}
///             + ((n-3)/2) q_{n+1} + ((n-3)/(12n)) q_{n+3} = (2x^3/3 - x) q_n
/// Theta is stored exactly as the ad-condition module expects it.
NRecursion builtin_recursion(FamilyId f);

struct RecursionCheck {
  int n = 0;
  bool is_zero = false;
  int valid_order = std::numeric_limits<int>::max();  // finite only for series checks
  std::string residual;  // rendered only when nonzero
};

struct RecursionReport {
  std::string family;
  Polynomial theta;
  int n_begin = 0;
  int n_end = 0;
  std::vector<RecursionCheck> per_n;

  bool all_zero() const;
};

/// Exact residual per n over polynomials; negative indices are the zero
/// polynomial. Throws PoleError when a coefficient denominator vanishes on
/// the range.
RecursionReport check_recursion_poly(const NRecursion& rec,
                                     const std::function<Polynomial(int)>& family, int n_begin,
                                     int n_end, const std::string& family_label);

/// Residual per n over truncated series generated at a common order.
RecursionReport check_recursion_series(const NRecursion& rec,
                                       const std::function<TruncatedSeries(int)>& family,
                                       int n_begin, int n_end, const std::string& family_label);

/// Evaluates c_j at a concrete n.
Rational eval_coeff_of_n(const RationalFunction& c, int n);

}  // namespace bispec
