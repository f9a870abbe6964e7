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

#include "bispec/rational_function.hpp"

namespace bispec {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::one();
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  auto [cn, pn] = num_.content_primitive();
  auto [cd, pd] = den_.content_primitive();
  Rational scalar = cn / cd;  // positive
  if (pd.leading_coeff().sign() < 0) {
    pd = -pd;
    pn = -pn;
  }
  num_ = pn * Rational(scalar.numerator());
  den_ = pd * Rational(scalar.denominator());
}

Polynomial RationalFunction::to_polynomial() const {
  if (!is_polynomial()) throw Error("rational function is not a polynomial");
  if (num_.is_zero()) return Polynomial();
  return num_ * den_.coeff(0).reciprocal();
}

int RationalFunction::valuation_at_zero() const {
  if (is_zero()) throw Error("valuation of the zero function");
  return num_.valuation() - den_.valuation();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZeroError("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const RationalFunction& f, const Rational& s) {
  if (s.is_zero()) return RationalFunction();
  return RationalFunction(f.num_ * s, f.den_);
}

RationalFunction RationalFunction::derivative() const {
  // quotient rule; canonicalization clears the common square factors
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& x0) const {
  const Rational d = den_.eval(x0);
  if (d.is_zero()) throw PoleError("rational function evaluated at a pole");
  return num_.eval(x0) / d;
}

}  // namespace bispec
