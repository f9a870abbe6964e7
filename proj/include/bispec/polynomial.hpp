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

#include <initializer_list>
#include <utility>
#include <vector>

#include "bispec/rational.hpp"

namespace bispec {

/// Dense univariate polynomial over Rational, coefficients indexed by degree.
/// Invariant: no trailing zero coefficient; the zero polynomial stores nothing.
class Polynomial {
 public:
  /// degree() of the zero polynomial; stands in for "minus infinity".
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
  explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
  explicit Polynomial(const Rational& constant) : c_{constant} { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial{Rational(1)}; }
  static Polynomial variable() { return Polynomial{Rational(0), Rational(1)}; }
  static Polynomial monomial(int degree, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Coefficient of x^i; zero outside the stored range.
  const Rational& coeff(int i) const;
  const Rational& leading_coeff() const;

  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& p, const Rational& s);
  friend Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial derivative() const;
  Rational eval(const Rational& x0) const;
  Polynomial pow(int e) const;

  /// Multiplies by x^k, k >= 0.
  Polynomial mul_xpow(int k) const;

  /// Exponent of the lowest nonzero coefficient; kZeroDegree for zero.
  int valuation() const;

  /// Euclidean division: returns (quotient, remainder) with deg r < deg d.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d);

  /// Division known to be exact; throws Error if a remainder appears.
  Polynomial exact_div(const Polynomial& d) const;

  /// Factors *this as content * primitive: content > 0, primitive has integer
  /// coefficients with overall gcd 1 and carries the sign of the input.
  std::pair<Rational, Polynomial> content_primitive() const;

  /// Primitive integer-coefficient gcd with positive leading coefficient;
  /// gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace bispec
