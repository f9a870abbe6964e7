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

#include "bispec/rational_function.hpp"

namespace bispec {

/// Truncated Laurent series sum_{i=low..trunc} c_i x^i. Exponents below `low`
/// are exactly zero; nothing is claimed beyond `trunc` (the certified order).
/// Every operation propagates the certified order explicitly:
///   a*b     -> min(Na + mb, Nb + ma)
///   a + b   -> min(Na, Nb)
///   d/dx    -> N - 1
///   integral-> N + 1
///   1/a     -> min(requested, Na - 2*ma)
class TruncatedSeries {
 public:
  /// Deepest Laurent pole the engine accepts.
  static constexpr int kMinLowOrder = -8;

  /// Certified-zero series through x^trunc.
  static TruncatedSeries zero(int trunc);
  static TruncatedSeries from_polynomial(const Polynomial& p, int trunc);
  static TruncatedSeries monomial(int exponent, const Rational& c, int trunc);
  TruncatedSeries(int low, int trunc, std::vector<Rational> coeffs);

  int low_order() const { return low_; }
  int trunc_order() const { return trunc_; }

  /// Coefficient of x^i for i <= trunc(); throws ValidOrderError beyond.
  const Rational& coeff(int i) const;

  bool is_zero() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& s, const Rational& c);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) { return s * c; }

  /// Structural equality: same certified window and coefficients.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.low_ == b.low_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  /// True when a - b vanishes identically on the shared certified window.
  bool agrees_with(const TruncatedSeries& o) const { return (*this - o).is_zero(); }

  TruncatedSeries derivative() const;

  /// Termwise antiderivative with constant term 0. Throws LogTermError when
  /// the x^-1 coefficient is nonzero.
  TruncatedSeries integrate() const;

  /// Multiplicative inverse; lowest certified coefficient must be nonzero.
  TruncatedSeries reciprocal(int target_trunc) const;

  /// Multiplies by x^k (k of either sign).
  TruncatedSeries mul_xpow(int k) const;

  /// Substitutes x -> x^m (m >= 1); requires low_order() >= 0.
  TruncatedSeries stretch(int m) const;

  /// Restricts the certified window; cannot extend it.
  TruncatedSeries truncate(int new_trunc) const;

 private:
  TruncatedSeries() = default;  // the zero window; reachable through zero()
  void normalize();

  int low_ = 0;
  int trunc_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

/// Laurent expansion of f at x = 0, certified through x^trunc. The lowest
/// exponent is valuation(num) - valuation(den); depth below -8 aborts.
TruncatedSeries series_at_zero(const RationalFunction& f, int trunc);

}  // namespace bispec
