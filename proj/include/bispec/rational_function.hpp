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

#include "bispec/polynomial.hpp"

namespace bispec {

/// Quotient of polynomials in canonical form: num and den have integer
/// coefficients, each primitive up to a shared reduced scalar, the cofactors
/// are coprime and the denominator has a positive leading coefficient.
/// Equality is therefore plain structural comparison.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::one()) {}
  RationalFunction(const Rational& c) : num_(Polynomial{c}), den_(Polynomial::one()) { canonicalize(); }  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::one()) { canonicalize(); }            // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(Rational(1)); }
  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Requires is_polynomial().
  Polynomial to_polynomial() const;

  /// Order of vanishing at x = 0: valuation(num) - valuation(den).
  /// Throws on the zero function.
  int valuation_at_zero() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& f, const Rational& s);
  friend RationalFunction operator*(const Rational& s, const RationalFunction& f) { return f * s; }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction derivative() const;

  /// Throws PoleError when the denominator vanishes at x0.
  Rational eval(const Rational& x0) const;

 private:
  void canonicalize();

  Polynomial num_, den_;
};

}  // namespace bispec
