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

#include "bispec/polynomial.hpp"

namespace bispec {

namespace {
const Rational kZero{};
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw Error("monomial with negative degree");
  if (coeff.is_zero()) return Polynomial();
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

const Rational& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading_coeff() const {
  if (is_zero()) return kZero;
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Rational& s) {
  if (s.is_zero()) return Polynomial();
  Polynomial r(p);
  for (auto& c : r.c_) c *= s;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x0) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  Polynomial r = Polynomial::one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::mul_xpow(int k) const {
  if (k < 0) throw Error("mul_xpow with negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> c(c_.size() + static_cast<size_t>(k));
  for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(k)] = c_[i];
  return Polynomial(std::move(c));
}

int Polynomial::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return kZeroDegree;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Polynomial r = n;
  std::vector<Rational> q;
  if (n.degree() >= d.degree()) q.resize(static_cast<size_t>(n.degree() - d.degree()) + 1);
  const Rational lead_inv = d.leading_coeff().reciprocal();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Rational factor = r.leading_coeff() * lead_inv;
    q[static_cast<size_t>(shift)] = factor;
    r -= (d * factor).mul_xpow(shift);
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  auto [q, r] = divmod(*this, d);
  if (!r.is_zero()) throw Error("exact_div with nonzero remainder");
  return q;
}

std::pair<Rational, Polynomial> Polynomial::content_primitive() const {
  if (is_zero()) return {Rational(0), Polynomial()};
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  const Rational content{num_gcd, den_lcm};  // positive: num_gcd from mpz_gcd is >= 0
  const Rational inv = content.reciprocal();
  Polynomial prim(*this);
  for (auto& c : prim.c_) c *= inv;
  return {content, prim};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  auto [content, prim] = a.content_primitive();
  (void)content;
  if (prim.leading_coeff().sign() < 0) return -prim;
  return prim;
}

}  // namespace bispec
