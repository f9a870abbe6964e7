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

#include "bispec/recursion.hpp"

#include <algorithm>

#include "bispec/format.hpp"

namespace bispec {

namespace {
// polynomial in the recursion index n, lowest degree first
Polynomial npoly(std::initializer_list<Rational> ascending) { return Polynomial(ascending); }
}  // namespace

NRecursion builtin_recursion(FamilyId f) {
  NRecursion rec;
  switch (f) {
    case FamilyId::Hermite:
      rec.terms = {{+1, RationalFunction(Rational(1, 2))},
                   {-1, RationalFunction(npoly({Rational(0), Rational(1)}))}};
      rec.theta = Polynomial::variable();
      return rec;
    case FamilyId::OneGap:
      rec.terms = {{-2, RationalFunction(npoly({Rational(0), Rational(-1, 2), Rational(1, 2)}))},
                   {0, RationalFunction(npoly({Rational(-1, 4), Rational(1, 2)}))},
                   {+2, RationalFunction(npoly({Rational(-1), Rational(1)}),
                                         npoly({Rational(8), Rational(8)}))}};
      rec.theta = Polynomial{Rational(0), Rational(0), Rational(1, 2)};  // x^2/2
      return rec;
    case FamilyId::TwoGap: {
      // (2/3)(n-1)(n-2)(n-3) = (2/3)(n^3 - 6n^2 + 11n - 6)
      const Polynomial c3 = npoly({Rational(-4), Rational(22, 3), Rational(-4), Rational(2, 3)});
      const Polynomial c1 = npoly({Rational(3), Rational(-4), Rational(1)});  // (n-3)(n-1)
      rec.terms = {{-3, RationalFunction(c3)},
                   {-1, RationalFunction(c1)},
                   {+1, RationalFunction(npoly({Rational(-3, 2), Rational(1, 2)}))},
                   {+3, RationalFunction(npoly({Rational(-3), Rational(1)}),
                                         npoly({Rational(0), Rational(12)}))}};
      rec.theta = Polynomial{Rational(0), Rational(-1), Rational(0), Rational(2, 3)};
      return rec;
    }
  }
  throw Error("unknown family");
}

bool RecursionReport::all_zero() const {
  return std::all_of(per_n.begin(), per_n.end(),
                     [](const RecursionCheck& c) { return c.is_zero; });
}

Rational eval_coeff_of_n(const RationalFunction& c, int n) {
  try {
    return c.eval(Rational(n));
  } catch (const PoleError&) {
    throw PoleError("recursion coefficient has a pole at n=" + std::to_string(n));
  }
}

RecursionReport check_recursion_poly(const NRecursion& rec,
                                     const std::function<Polynomial(int)>& family, int n_begin,
                                     int n_end, const std::string& family_label) {
  RecursionReport report{family_label, rec.theta, n_begin, n_end, {}};
  for (int n = n_begin; n <= n_end; ++n) {
    Polynomial residual = -(rec.theta * family(n));
    for (const auto& term : rec.terms) {
      const int idx = n + term.offset;
      const Polynomial member = idx < 0 ? Polynomial::zero() : family(idx);
      residual += member * eval_coeff_of_n(term.coeff_of_n, n);
    }
    RecursionCheck check;
    check.n = n;
    check.is_zero = residual.is_zero();
    if (!check.is_zero) check.residual = to_string(residual);
    report.per_n.push_back(std::move(check));
  }
  return report;
}

RecursionReport check_recursion_series(const NRecursion& rec,
                                       const std::function<TruncatedSeries(int)>& family,
                                       int n_begin, int n_end, const std::string& family_label) {
  RecursionReport report{family_label, rec.theta, n_begin, n_end, {}};
  for (int n = n_begin; n <= n_end; ++n) {
    const TruncatedSeries f_n = family(n);
    const TruncatedSeries theta_series =
        TruncatedSeries::from_polynomial(rec.theta, f_n.trunc_order() + rec.theta.degree());
    TruncatedSeries residual = -(theta_series * f_n);
    for (const auto& term : rec.terms) {
      const int idx = n + term.offset;
      const Rational c = eval_coeff_of_n(term.coeff_of_n, n);
      if (idx < 0 || c.is_zero()) continue;
      residual = residual + family(idx) * c;
    }
    RecursionCheck check;
    check.n = n;
    check.is_zero = residual.is_zero();
    check.valid_order = residual.trunc_order();
    if (!check.is_zero) check.residual = to_string(residual);
    report.per_n.push_back(std::move(check));
  }
  return report;
}

}  // namespace bispec
