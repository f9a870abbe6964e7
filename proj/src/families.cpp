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

#include "bispec/families.hpp"

#include <algorithm>

namespace bispec {

namespace {

const Polynomial kX = Polynomial::variable();

Rational pow4(long m) { return Rational(mpz_class(mpz_class(1) << static_cast<unsigned>(2 * m))); }

}  // namespace

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::Hermite: return "hermite";
    case FamilyId::OneGap: return "one-gap";
    case FamilyId::TwoGap: return "two-gap";
  }
  throw Error("unknown family");
}

FamilyId family_from_name(const std::string& name) {
  if (name == "hermite") return FamilyId::Hermite;
  if (name == "one-gap") return FamilyId::OneGap;
  if (name == "two-gap") return FamilyId::TwoGap;
  throw Error("unknown family name: " + name);
}

DiffOperator family_operator(FamilyId f) {
  const RationalFunction one = RationalFunction::one();
  switch (f) {
    case FamilyId::Hermite:
      return DiffOperator({RationalFunction::zero(), RationalFunction(kX * Rational(-2)), one});
    case FamilyId::OneGap:
      // -2(x + 1/x) = (-2x^2 - 2)/x
      return DiffOperator(
          {RationalFunction::zero(),
           RationalFunction(Polynomial{Rational(-2), Rational(0), Rational(-2)}, kX), one});
    case FamilyId::TwoGap: {
      const Polynomial den{Rational(-1), Rational(0), Rational(2)};  // 2x^2 - 1
      const Polynomial num1{Rational(0), Rational(-6), Rational(0), Rational(-4)};  // -4x^3 - 6x
      return DiffOperator({RationalFunction(Polynomial{Rational(8)}, den),
                           RationalFunction(num1, den), one});
    }
  }
  throw Error("unknown family");
}

GaugeWeight family_gauge_weight(FamilyId f) {
  switch (f) {
    case FamilyId::Hermite:
      return {RationalFunction(kX)};
    case FamilyId::OneGap:
      // 1/x + x
      return {RationalFunction(Polynomial{Rational(1), Rational(0), Rational(1)}, kX)};
    case FamilyId::TwoGap: {
      // x + 4x/(2x^2-1) = (2x^3 + 3x)/(2x^2 - 1)
      const Polynomial den{Rational(-1), Rational(0), Rational(2)};
      const Polynomial num{Rational(0), Rational(3), Rational(0), Rational(2)};
      return {RationalFunction(num, den)};
    }
  }
  throw Error("unknown family");
}

Polynomial hermite_poly(int n) {
  if (n < 0) throw Error("Hermite index must be >= 0");
  Polynomial prev = Polynomial::one();            // H_0
  if (n == 0) return prev;
  Polynomial cur = kX * Rational(2);              // H_1
  for (int k = 1; k < n; ++k) {
    Polynomial next = (kX * cur) * Rational(2) - prev * Rational(2 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Polynomial> hermite_polys(int n_max) {
  std::vector<Polynomial> h;
  h.reserve(static_cast<size_t>(n_max) + 1);
  h.push_back(Polynomial::one());
  if (n_max >= 1) h.push_back(kX * Rational(2));
  for (int k = 1; k < n_max; ++k)
    h.push_back((kX * h.back()) * Rational(2) - h[static_cast<size_t>(k - 1)] * Rational(2 * k));
  return h;
}

Polynomial wronskian_eigen_poly(FamilyId f, int n) {
  if (n < 0) throw Error("eigenpolynomial index must be >= 0");
  switch (f) {
    case FamilyId::OneGap: {
      const Polynomial h = hermite_poly(n);
      return kX * h.derivative() - h;
    }
    case FamilyId::TwoGap: {
      if (n == 0) return Polynomial::zero();
      const Polynomial h = hermite_poly(n - 1);
      const Polynomial seed{Rational(-2), Rational(0), Rational(4)};  // 4x^2 - 2
      return seed * h.derivative() - (kX * Rational(8)) * h;
    }
    case FamilyId::Hermite:
      break;
  }
  throw Error("wronskian_eigen_poly requires the one-gap or two-gap family");
}

TruncatedSeries hyp1f1_series(const Rational& a, const Rational& b, int n_terms) {
  if (n_terms < 0) throw Error("series length must be >= 0");
  std::vector<Rational> c(static_cast<size_t>(n_terms) + 1);
  Rational term(1);
  for (int k = 0; k <= n_terms; ++k) {
    c[static_cast<size_t>(k)] = term;
    if (k == n_terms) break;
    const Rational ak = a + Rational(k);
    if (ak.is_zero()) break;  // terminating series; rest is zero
    const Rational bk = b + Rational(k);
    if (bk.is_zero())
      throw PoleError("pochhammer pole: lower parameter " + b.to_string() + " hits zero at k=" +
                      std::to_string(k));
    term = term * ak / (bk * Rational(k + 1));
  }
  return TruncatedSeries(0, n_terms, std::move(c));
}

TruncatedSeries psi_family(int n, int trunc) {
  if (n < 0) throw Error("psi index must be >= 0");
  const int k_terms = trunc / 2 + 1;
  if (n % 2 == 1) {
    const long m = (n - 1) / 2;
    const Rational scalar =
        Rational((m % 2 == 0) ? -1 : 1) * pow4(m) * Rational(mpz_class(factorial(m)));
    const TruncatedSeries f =
        hyp1f1_series(Rational(-2 * m - 1, 2), Rational(1, 2), k_terms).stretch(2);
    return (f * scalar).truncate(trunc);
  }
  const long m = n / 2;
  const Rational scalar =
      Rational((m % 2 == 0) ? 1 : -1) * pow4(m) * Rational(mpz_class(factorial(m)));
  const TruncatedSeries f =
      hyp1f1_series(Rational(1 - 2 * m, 2), Rational(3, 2), k_terms).stretch(2).mul_xpow(1);
  return (f * scalar).truncate(trunc);
}

Rational onegap_S(long n, long i) {
  if (i < 1) throw Error("S index starts at 1");
  if (i == 1) return Rational(n);
  mpz_class prod = 1;
  for (long k = 0; k <= i - 1; ++k) prod *= (n - 2 * k);
  const mpz_class den = factorial(i) * double_factorial(2 * i - 3);
  Rational r{prod, den};
  return (i % 2 == 0) ? -r : r;  // (-1)^{i+1}
}

Rational onegap_Gamma(long n, long i) {
  if (i < 1) throw Error("Gamma index starts at 1");
  mpz_class prod = 3;
  for (long k = 1; k <= i - 1; ++k) prod *= (n - 2 * k - 1);
  const mpz_class den = factorial(i - 1) * double_factorial(2 * i + 1);
  Rational r{prod, den};
  return (i % 2 == 0) ? -r : r;  // (-1)^{i+1}
}

Rational twogap_S(long n, long i) {
  if (i < 1) throw Error("S index starts at 1");
  if (i == 1) return Rational(-(n - 4));
  mpz_class prod = n + 4 * i * (i - 2);
  for (long k = 1; k <= i - 1; ++k) prod *= (n - 2 * k);
  const mpz_class den = factorial(i) * double_factorial(2 * i - 1);
  Rational r{prod, den};
  return (i % 2 == 0) ? r : -r;  // (-1)^i
}

Rational twogap_Gamma(long n, long i) {
  if (i < 1) throw Error("Gamma index starts at 1");
  if (i == 1) return Rational(-(n - 1), 3);
  mpz_class prod = mpz_class(n - 1) * (n + (2 * i - 3) * (2 * i + 1));
  for (long k = 2; k <= i - 1; ++k) prod *= (n - 2 * k - 1);
  const mpz_class den = mpz_class(2 * i + 1) * factorial(i) * double_factorial(2 * i - 1);
  Rational r{prod, den};
  return (i % 2 == 0) ? r : -r;  // (-1)^i
}

TruncatedSeries family_even_basis(FamilyId f, int n, int trunc) {
  if (f == FamilyId::Hermite) throw Error("even basis exists for one-gap and two-gap only");
  std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
  c[0] = Rational(1);
  for (long i = 1; 2 * i <= trunc; ++i)
    c[static_cast<size_t>(2 * i)] = (f == FamilyId::OneGap) ? onegap_S(n, i) : twogap_S(n, i);
  return TruncatedSeries(0, trunc, std::move(c));
}

TruncatedSeries family_odd_basis(FamilyId f, int n, int trunc) {
  if (f == FamilyId::Hermite) throw Error("odd basis exists for one-gap and two-gap only");
  std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
  if (f == FamilyId::OneGap) {
    if (trunc >= 3) c[3] = Rational(1);
    for (long i = 2; 2 * i + 1 <= trunc; ++i)
      c[static_cast<size_t>(2 * i + 1)] = onegap_Gamma(n, i);
  } else {
    if (trunc >= 1) c[1] = Rational(1);
    for (long i = 1; 2 * i + 1 <= trunc; ++i)
      c[static_cast<size_t>(2 * i + 1)] = twogap_Gamma(n, i);
  }
  return TruncatedSeries(0, trunc, std::move(c));
}

bool satisfies_eigen_equation(FamilyId f, int n, const TruncatedSeries& s) {
  const DiffOperator op = family_operator(f);
  const TruncatedSeries residual = op.apply(s) + s * Rational(2 * n);
  return residual.is_zero();
}

SeriesFamilyElement series_family(FamilyId f, int n, const Rational& alpha, const Rational& beta,
                                  int trunc) {
  if (n < 0) throw Error("family index must be >= 0");
  const TruncatedSeries s =
      family_even_basis(f, n, trunc) * alpha + family_odd_basis(f, n, trunc) * beta;
  if (!satisfies_eigen_equation(f, n, s))
    throw EigencheckError("series family element (" + family_name(f) + ", n=" +
                          std::to_string(n) + ") fails its eigen-equation");
  return SeriesFamilyElement{f, n, alpha, beta, s};
}

std::pair<std::vector<Rational>, std::vector<Rational>> family_parameter_chain(
    FamilyId f, const FamilySeeds& seeds, int n_max) {
  const size_t n_alpha = (f == FamilyId::OneGap) ? 2 : 3;
  const size_t n_beta = (f == FamilyId::OneGap) ? 4 : 6;
  if (f == FamilyId::Hermite) throw Error("parameter chains exist for one-gap and two-gap only");
  if (seeds.alpha_seeds.size() != n_alpha || seeds.beta_seeds.size() != n_beta)
    throw Error("wrong seed count for " + family_name(f));
  std::vector<Rational> alpha(static_cast<size_t>(n_max) + 1), beta(alpha.size());
  for (int n = 0; n <= n_max; ++n) {
    const size_t un = static_cast<size_t>(n);
    if (un < n_alpha) {
      alpha[un] = seeds.alpha_seeds[un];
    } else {
      alpha[un] = Rational(-2 * (n - 1)) * alpha[un - 2];
    }
    const long ln = n;
    if (un < n_beta) {
      beta[un] = seeds.beta_seeds[un];
    } else if (f == FamilyId::OneGap) {
      // n >= 4 here, so the n-3 denominator cannot degenerate
      beta[un] = Rational(-2 * (ln - 1) * ln, ln - 3) * beta[un - 2];
    } else {
      // n >= 6 here, so the n-5 denominator cannot degenerate
      beta[un] = Rational(-2 * (ln - 3) * (ln - 2), ln - 5) * beta[un - 2];
    }
  }
  return {std::move(alpha), std::move(beta)};
}

std::vector<HypIdentityCheck> hypergeometric_identity_checks(int n_max, int trunc) {
  std::vector<HypIdentityCheck> out;
  const int k_terms = trunc / 2 + 1;
  const DiffOperator xd_minus_1 =
      DiffOperator({RationalFunction(Rational(-1)), RationalFunction(kX)});

  for (int n = 0; n <= n_max; ++n) {
    const Rational a_half{-n, 2};
    // (xd - 1) 1F1(-n/2; 1/2; x^2) = -1F1(-n/2; -1/2; x^2)
    {
      const TruncatedSeries lhs =
          xd_minus_1.apply(hyp1f1_series(a_half, Rational(1, 2), k_terms).stretch(2));
      const TruncatedSeries rhs =
          -(hyp1f1_series(a_half, Rational(-1, 2), k_terms).stretch(2));
      const TruncatedSeries r = lhs - rhs;
      out.push_back({"xd-shift-even", n, r.is_zero(), r.trunc_order()});
    }
    // (xd - 1)[x 1F1((1-n)/2; 3/2; x^2)] = (2/3)(1-n) x^3 1F1((3-n)/2; 5/2; x^2)
    {
      const TruncatedSeries lhs = xd_minus_1.apply(
          hyp1f1_series(Rational(1 - n, 2), Rational(3, 2), k_terms).stretch(2).mul_xpow(1));
      const TruncatedSeries rhs =
          hyp1f1_series(Rational(3 - n, 2), Rational(5, 2), k_terms).stretch(2).mul_xpow(3) *
          Rational(2 * (1 - n), 3);
      const TruncatedSeries r = lhs - rhs;
      out.push_back({"xd-shift-odd", n, r.is_zero(), r.trunc_order()});
    }
    // x 1F1((1-n)/2; 3/2; x^2) = 1F1(-n/2; 1/2; x^2) * Int_0^x e^{y^2} / 1F1(-n/2; 1/2; y^2)^2 dy
    {
      const TruncatedSeries f = hyp1f1_series(a_half, Rational(1, 2), k_terms).stretch(2);
      std::vector<Rational> e(static_cast<size_t>(trunc) + 1);
      for (long k = 0; 2 * k <= trunc; ++k)
        e[static_cast<size_t>(2 * k)] = Rational(mpz_class(1), factorial(k));
      const TruncatedSeries exp_sq(0, trunc, std::move(e));
      const TruncatedSeries integrand = exp_sq * (f * f).reciprocal(trunc);
      const TruncatedSeries integral = integrand.integrate();
      const TruncatedSeries lhs =
          hyp1f1_series(Rational(1 - n, 2), Rational(3, 2), k_terms).stretch(2).mul_xpow(1);
      const TruncatedSeries r = lhs - f * integral;
      out.push_back({"second-solution-quadrature", n, r.is_zero(), r.trunc_order()});
    }
  }
  return out;
}

}  // namespace bispec
