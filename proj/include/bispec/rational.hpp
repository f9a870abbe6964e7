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

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "bispec/errors.hpp"

namespace bispec {

/// Arbitrary-precision rational, the scalar field of the whole library.
/// Always canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}        // NOLINT: implicit by design, enables literals
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long n, long d) {
    if (d == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p", or "p/q".
  static Rational from_string(std::string_view s);

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational reciprocal() const {
    if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p/q" with "/1" omitted.
  std::string to_string() const;

 private:
  mpq_class v_;
};

/// n! for n >= 0.
mpz_class factorial(long n);

/// Double factorial with the boundary conventions (-1)!! = 1 and 0!! = 1.
mpz_class double_factorial(long n);

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

}  // namespace bispec
