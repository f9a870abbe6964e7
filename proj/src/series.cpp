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

#include "bispec/series.hpp"

#include <algorithm>
#include <string>

namespace bispec {

namespace {
const Rational kZero{};
}  // namespace

TruncatedSeries::TruncatedSeries(int low, int trunc, std::vector<Rational> coeffs)
    : low_(low), trunc_(trunc), c_(std::move(coeffs)) {
  if (trunc_ < low_) throw ValidOrderError("series window is empty (trunc < low)");
  if (c_.size() != static_cast<size_t>(trunc_ - low_ + 1))
    throw Error("series coefficient count does not match window");
  normalize();
}

TruncatedSeries TruncatedSeries::zero(int trunc) {
  TruncatedSeries s;
  s.low_ = trunc;
  s.trunc_ = trunc;
  s.c_ = {Rational(0)};
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int trunc) {
  if (p.is_zero() || trunc < 0) return zero(trunc);
  std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
  for (int i = 0; i <= std::min(trunc, p.degree()); ++i) c[static_cast<size_t>(i)] = p.coeff(i);
  return TruncatedSeries(0, trunc, std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(int exponent, const Rational& c, int trunc) {
  if (trunc < exponent) throw ValidOrderError("monomial exponent beyond truncation order");
  std::vector<Rational> v(static_cast<size_t>(trunc - exponent) + 1);
  v[0] = c;
  return TruncatedSeries(exponent, trunc, std::move(v));
}

// The Laurent-depth bound applies to the lowest *nonzero* exponent; windows
// of certified zeros may sit anywhere.
void TruncatedSeries::normalize() {
  size_t strip = 0;
  while (strip + 1 < c_.size() && c_[strip].is_zero()) ++strip;
  if (strip > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(strip));
    low_ += static_cast<int>(strip);
  }
  if (!c_[0].is_zero() && low_ < kMinLowOrder)
    throw PoleDepthError("Laurent low order " + std::to_string(low_) + " below bound " +
                         std::to_string(kMinLowOrder));
}

const Rational& TruncatedSeries::coeff(int i) const {
  if (i > trunc_)
    throw ValidOrderError("coefficient of x^" + std::to_string(i) +
                          " requested beyond certified order " + std::to_string(trunc_));
  if (i < low_) return kZero;
  return c_[static_cast<size_t>(i - low_)];
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int low = std::min(a.low_, b.low_);
  const int trunc = std::min(a.trunc_, b.trunc_);
  std::vector<Rational> c(static_cast<size_t>(trunc - low) + 1);
  for (int i = low; i <= trunc; ++i) {
    Rational v;
    if (i >= a.low_ && i <= a.trunc_) v += a.c_[static_cast<size_t>(i - a.low_)];
    if (i >= b.low_ && i <= b.trunc_) v += b.c_[static_cast<size_t>(i - b.low_)];
    c[static_cast<size_t>(i - low)] = v;
  }
  return TruncatedSeries(low, trunc, std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int low = a.low_ + b.low_;
  const int trunc = std::min(a.trunc_ + b.low_, b.trunc_ + a.low_);
  std::vector<Rational> c(static_cast<size_t>(trunc - low) + 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const int ea = a.low_ + static_cast<int>(i);
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      const int e = ea + b.low_ + static_cast<int>(j);
      if (e > trunc) break;
      c[static_cast<size_t>(e - low)] += a.c_[i] * b.c_[j];
    }
  }
  return TruncatedSeries(low, trunc, std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& s, const Rational& c) {
  TruncatedSeries r(s);
  for (auto& v : r.c_) v *= c;
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  const int trunc = trunc_ - 1;
  if (low_ == 0 && trunc < 0) return zero(trunc);
  const int low = (low_ == 0) ? 0 : low_ - 1;
  if (trunc < low) return zero(trunc);
  std::vector<Rational> c(static_cast<size_t>(trunc - low) + 1);
  for (int i = low_; i <= trunc_; ++i) {
    if (i == 0) continue;  // the constant drops out
    const int e = i - 1;
    if (e >= low && e <= trunc) c[static_cast<size_t>(e - low)] = coeff(i) * Rational(i);
  }
  return TruncatedSeries(low, trunc, std::move(c));
}

TruncatedSeries TruncatedSeries::integrate() const {
  if (low_ <= -1 && trunc_ >= -1 && !coeff(-1).is_zero()) throw LogTermError();
  const int low = low_ + 1;
  const int trunc = trunc_ + 1;
  std::vector<Rational> c(static_cast<size_t>(trunc - low) + 1);
  for (int i = low_; i <= trunc_; ++i) {
    if (i == -1) continue;  // checked zero above
    c[static_cast<size_t>(i + 1 - low)] = coeff(i) / Rational(i + 1);
  }
  return TruncatedSeries(low, trunc, std::move(c));
}

TruncatedSeries TruncatedSeries::reciprocal(int target_trunc) const {
  if (is_zero()) throw ZeroLeadingTermError();
  const Rational& a0 = c_[0];  // normalize() put the valuation term first
  const int m = low_;
  const int avail = trunc_ - 2 * m;  // certified order of 1/this
  const int trunc = std::min(target_trunc, avail);
  const int low = -m;
  if (trunc < low) throw ValidOrderError("reciprocal window is empty");
  // 1/(a0 x^m (1+u)) with u the relative tail; v = 1/(1+u) by convolution
  const int rel = trunc - low;  // relative orders 0..rel
  std::vector<Rational> u(static_cast<size_t>(rel) + 1), v(static_cast<size_t>(rel) + 1);
  for (int r = 1; r <= rel; ++r)
    u[static_cast<size_t>(r)] =
        (r < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(r)] : kZero) / a0;
  v[0] = Rational(1);
  for (int r = 1; r <= rel; ++r) {
    Rational acc;
    for (int j = 1; j <= r; ++j) acc += u[static_cast<size_t>(j)] * v[static_cast<size_t>(r - j)];
    v[static_cast<size_t>(r)] = -acc;
  }
  const Rational inv = a0.reciprocal();
  for (auto& x : v) x *= inv;
  return TruncatedSeries(low, trunc, std::move(v));
}

TruncatedSeries TruncatedSeries::mul_xpow(int k) const {
  TruncatedSeries r(*this);
  r.low_ += k;
  r.trunc_ += k;
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::stretch(int m) const {
  if (m < 1) throw Error("stretch factor must be >= 1");
  if (low_ < 0) throw Error("stretch of a Laurent series");
  const int low = low_ * m;
  const int trunc = trunc_ * m + (m - 1);
  std::vector<Rational> c(static_cast<size_t>(trunc - low) + 1);
  for (int i = low_; i <= trunc_; ++i) c[static_cast<size_t>(i * m - low)] = coeff(i);
  return TruncatedSeries(low, trunc, std::move(c));
}

TruncatedSeries TruncatedSeries::truncate(int new_trunc) const {
  if (new_trunc > trunc_) throw ValidOrderError("cannot extend certified order by truncation");
  if (new_trunc == trunc_) return *this;
  if (new_trunc < low_) return zero(new_trunc);
  std::vector<Rational> c(c_.begin(), c_.begin() + (new_trunc - low_ + 1));
  return TruncatedSeries(low_, new_trunc, std::move(c));
}

TruncatedSeries series_at_zero(const RationalFunction& f, int trunc) {
  if (f.is_zero()) return TruncatedSeries::zero(trunc);
  const int vn = f.num().valuation();
  const int vd = f.den().valuation();
  const int low = vn - vd;
  if (low < TruncatedSeries::kMinLowOrder)
    throw PoleDepthError("pole of order " + std::to_string(-low) + " at x=0 exceeds bound");
  if (low > trunc) return TruncatedSeries::zero(trunc);
  const Polynomial num0 = f.num().exact_div(Polynomial::monomial(vn, Rational(1)));
  const Polynomial den0 = f.den().exact_div(Polynomial::monomial(vd, Rational(1)));
  const int rel = trunc - low;
  const TruncatedSeries d = TruncatedSeries::from_polynomial(den0, rel);
  const TruncatedSeries n = TruncatedSeries::from_polynomial(num0, rel);
  return (n * d.reciprocal(rel)).mul_xpow(low);
}

}  // namespace bispec
