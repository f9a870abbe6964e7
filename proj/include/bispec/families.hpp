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

#include <string>
#include <vector>

#include "bispec/diff_operator.hpp"

namespace bispec {

/// The three operator families: the Hermite operator H = d^2 - 2x d, its
/// one-gap Darboux transform L = d^2 - 2(x + 1/x) d, and the two-gap
/// transform Lt = d^2 - (2(2x^3+3x)/(2x^2-1)) d + 8/(2x^2-1).
enum class FamilyId { Hermite, OneGap, TwoGap };

std::string family_name(FamilyId f);
FamilyId family_from_name(const std::string& name);

DiffOperator family_operator(FamilyId f);

/// Logarithmic derivative of the gauge factor that brings the family operator
/// to Schroedinger form: x; 1/x + x; x + 4x/(2x^2-1).
GaugeWeight family_gauge_weight(FamilyId f);

/// Physicists' Hermite polynomial via H_{n+1} = 2x H_n - 2n H_{n-1}.
Polynomial hermite_poly(int n);
std::vector<Polynomial> hermite_polys(int n_max);

/// Polynomial eigenfunctions of the transformed operators, in determinant
/// form: p_n = x H_n' - H_n (one-gap), q_n = (4x^2-2) H_{n-1}' - 8x H_{n-1}
/// (two-gap, with q_0 = 0). (Op + 2n) annihilates the result.
Polynomial wronskian_eigen_poly(FamilyId f, int n);

/// Kummer series sum_k (a)_k / ((b)_k k!) t^k through t^n_terms, exact.
/// Throws PoleError if (b)_k vanishes before the series terminates.
TruncatedSeries hyp1f1_series(const Rational& a, const Rational& b, int n_terms);

/// The nonpolynomial companion eigenfunctions of the Hermite operator,
/// normalized so psi_0 = x + x^3/3 + x^5/10 + ...:
///   psi_{2m+1} = (-1)^{m+1} 4^m m! 1F1(-m-1/2; 1/2; x^2)
///   psi_{2m}   = (-4)^m m! x 1F1(1/2-m; 3/2; x^2)
/// Certified through x^trunc.
TruncatedSeries psi_family(int n, int trunc);

/// Closed-form series coefficients of the one- and two-gap eigenfunction
/// bases (i >= 1). The double-factorial convention (-1)!! = 1 covers i = 1.
Rational onegap_S(long n, long i);
Rational onegap_Gamma(long n, long i);
Rational twogap_S(long n, long i);
Rational twogap_Gamma(long n, long i);

/// Even basis series: 1 + sum_{i>=1} S_{n,i} x^{2i}.
TruncatedSeries family_even_basis(FamilyId f, int n, int trunc);
/// Odd basis series: x^3 + sum_{i>=2} Gamma x^{2i+1} (one-gap) or
/// x + sum_{i>=1} Gamma x^{2i+1} (two-gap).
TruncatedSeries family_odd_basis(FamilyId f, int n, int trunc);

struct SeriesFamilyElement {
  FamilyId family;
  int n = 0;
  Rational alpha;
  Rational beta;
  TruncatedSeries series = TruncatedSeries::zero(0);
};

/// True when (Op + 2n) annihilates s through its propagated certified order.
bool satisfies_eigen_equation(FamilyId f, int n, const TruncatedSeries& s);

/// alpha * even + beta * odd, eigen-validated on construction
/// (throws EigencheckError on failure — that signals a transcription bug).
SeriesFamilyElement series_family(FamilyId f, int n, const Rational& alpha, const Rational& beta,
                                  int trunc);

/// Seed values for the free parameters; alpha_seeds/beta_seeds sizes are
/// (2, 4) for one-gap and (3, 6) for two-gap.
struct FamilySeeds {
  std::vector<Rational> alpha_seeds;
  std::vector<Rational> beta_seeds;
};

/// alpha_n, beta_n for n = 0..n_max generated from the recursions
///   one-gap: alpha_n = -2(n-1) alpha_{n-2} (n>=2),
///            beta_n = -2(n-1)n/(n-3) beta_{n-2} (n>=4)
///   two-gap: alpha_n = -2(n-1) alpha_{n-2} (n>=3),
///            beta_n = -2(n-3)(n-2)/(n-5) beta_{n-2} (n>=6)
std::pair<std::vector<Rational>, std::vector<Rational>> family_parameter_chain(
    FamilyId f, const FamilySeeds& seeds, int n_max);

struct HypIdentityCheck {
  std::string identity;
  int n = 0;
  bool zero_residual = false;
  int valid_order = 0;
};

/// The two (x d - 1) Kummer identities and the quadrature identity that
/// produces the second solution from the first, verified coefficient-wise
/// for n = 0..n_max at truncation `trunc`.
std::vector<HypIdentityCheck> hypergeometric_identity_checks(int n_max, int trunc);

}  // namespace bispec
