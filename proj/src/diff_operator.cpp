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

#include "bispec/diff_operator.hpp"

#include <algorithm>

namespace bispec {

namespace {
const RationalFunction kZeroRf{};
}

DiffOperator DiffOperator::dx(int k) {
  if (k < 0) throw Error("derivative order must be >= 0");
  std::vector<RationalFunction> c(static_cast<size_t>(k) + 1);
  c.back() = RationalFunction::one();
  return DiffOperator(std::move(c));
}

const RationalFunction& DiffOperator::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroRf;
  return c_[static_cast<size_t>(k)];
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
  std::vector<RationalFunction> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return DiffOperator(std::move(c));
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + (-b); }

DiffOperator operator*(const DiffOperator& a, const Rational& s) {
  DiffOperator r(a);
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  if (a.is_zero() || b.is_zero()) return DiffOperator();
  std::vector<RationalFunction> out(static_cast<size_t>(a.order() + b.order()) + 1);
  for (int k = 0; k <= a.order(); ++k) {
    const RationalFunction& ak = a.coeff(k);
    if (ak.is_zero()) continue;
    for (int j = 0; j <= b.order(); ++j) {
      // a d^k ∘ b d^j = sum_i C(k,i) a b^{(i)} d^{k+j-i}
      RationalFunction bder = b.coeff(j);
      for (int i = 0; i <= k; ++i) {
        if (!bder.is_zero()) {
          const Rational binom{binomial(k, i)};
          out[static_cast<size_t>(k + j - i)] += ak * bder * binom;
        }
        if (i < k) bder = bder.derivative();
      }
    }
  }
  return DiffOperator(std::move(out));
}

RationalFunction DiffOperator::apply(const Polynomial& p) const {
  RationalFunction acc;
  Polynomial der = p;
  for (int k = 0; k <= order(); ++k) {
    if (!coeff(k).is_zero()) acc += coeff(k) * RationalFunction(der);
    if (k < order()) der = der.derivative();
  }
  return acc;
}

TruncatedSeries DiffOperator::apply(const TruncatedSeries& s) const {
  if (is_zero()) {
    // certified through the weakest window any term would have produced
    int t = s.trunc_order();
    return TruncatedSeries::zero(t);
  }
  bool first = true;
  TruncatedSeries acc = TruncatedSeries::zero(0);
  TruncatedSeries der = s;
  for (int k = 0; k <= order(); ++k) {
    if (!coeff(k).is_zero()) {
      const int ma = coeff(k).valuation_at_zero();
      // expand the coefficient far enough that the product's certified order
      // is limited by the series operand, not by the expansion
      const int need = std::max(der.trunc_order() + ma - der.low_order(), ma);
      const TruncatedSeries a = series_at_zero(coeff(k), need);
      const TruncatedSeries term = a * der;
      acc = first ? term : acc + term;
      first = false;
    }
    if (k < order()) der = der.derivative();
  }
  return acc;
}

DiffOperator DiffOperator::gauge(const GaugeWeight& g) const {
  if (is_zero()) return DiffOperator();
  const DiffOperator shifted = DiffOperator({g.w, RationalFunction::one()});  // d + w
  DiffOperator result;
  DiffOperator power = DiffOperator::identity();  // (d + w)^k
  for (int k = 0; k <= order(); ++k) {
    if (!coeff(k).is_zero()) result = result + DiffOperator::mul(coeff(k)) * power;
    if (k < order()) power = shifted * power;
  }
  return result;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

DiffOperator ad_power(const DiffOperator& a, const DiffOperator& y, int k) {
  if (k < 0) throw Error("ad power must be >= 0");
  DiffOperator r = y;
  for (int i = 0; i < k; ++i) r = commutator(a, r);
  return r;
}

DiffOperator intertwine_residual(const DiffOperator& a, const DiffOperator& b,
                                 const DiffOperator& t) {
  return a * t - t * b;
}

}  // namespace bispec
