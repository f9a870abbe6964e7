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

#include "bispec/series.hpp"

namespace bispec {

/// Logarithmic derivative w = h'/h of a gauge factor h. All gauge factors in
/// this library (e^{x^2/2}, x e^{x^2/2}, e^{x^2/2}(2x^2-1)) have rational w,
/// so conjugation never leaves exact arithmetic.
struct GaugeWeight {
  RationalFunction w;
};

/// Ordinary differential operator sum_k a_k(x) d^k with rational-function
/// coefficients, indexed by derivative order. Equality is coefficient-wise
/// comparison of canonical forms.
class DiffOperator {
 public:
  DiffOperator() = default;  // the zero operator
  explicit DiffOperator(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DiffOperator zero() { return DiffOperator(); }
  static DiffOperator identity() { return DiffOperator({RationalFunction::one()}); }
  /// d^k
  static DiffOperator dx(int k = 1);
  /// The operator "multiplication by f".
  static DiffOperator mul(const RationalFunction& f) { return DiffOperator({f}); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RationalFunction& coeff(int k) const;
  const std::vector<RationalFunction>& coeffs() const { return c_; }

  DiffOperator operator-() const;
  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(const DiffOperator& a, const Rational& s);
  friend DiffOperator operator*(const Rational& s, const DiffOperator& a) { return a * s; }
  /// Composition A∘B via the Leibniz expansion.
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);

  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

  /// A(p); the result may be rational even when the final identity is
  /// polynomial (L carries a 1/x coefficient).
  RationalFunction apply(const Polynomial& p) const;

  /// A(s) with every coefficient Laurent-expanded at 0; the certified order
  /// shrinks by the operator order and coefficient pole depths.
  TruncatedSeries apply(const TruncatedSeries& s) const;

  /// h^{-1} ∘ A ∘ h computed symbolically through d -> d + w.
  DiffOperator gauge(const GaugeWeight& g) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<RationalFunction> c_;
};

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// (ad A)^k (y), with (ad A)^0 (y) = y.
DiffOperator ad_power(const DiffOperator& a, const DiffOperator& y, int k);

/// A∘T - T∘B; the zero operator iff T intertwines B into A.
DiffOperator intertwine_residual(const DiffOperator& a, const DiffOperator& b,
                                 const DiffOperator& t);

}  // namespace bispec
