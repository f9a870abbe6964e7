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

#include "bispec/verify.hpp"

#include <algorithm>
#include <sstream>

#include "bispec/adcond.hpp"
#include "bispec/constraints.hpp"
#include "bispec/format.hpp"
#include "bispec/kernel_oracle.hpp"
#include "bispec/lcg.hpp"
#include "bispec/parallel.hpp"

namespace bispec {

namespace {

const Polynomial kX = Polynomial::variable();

// Per-index outcomes of a parallel sweep, collapsed into one check.
struct SweepOutcome {
  std::vector<std::string> problems;  // empty string = index passed

  explicit SweepOutcome(int count) : problems(static_cast<size_t>(count)) {}

  CheckResult collapse(const std::string& name, const std::string& ok_details,
                       Json data = nullptr) const {
    for (const auto& p : problems)
      if (!p.empty()) return CheckResult::fail(name, p, std::move(data));
    return CheckResult::pass(name, ok_details, std::move(data));
  }
};

DiffOperator displayed_t() {
  const Polynomial lead{Rational(-1), Rational(0), Rational(2)};  // 2x^2 - 1
  return DiffOperator({RationalFunction::zero(), RationalFunction(kX * Rational(-4)),
                       RationalFunction(lead)});
}

DiffOperator displayed_s() {
  const Polynomial den{Rational(-1), Rational(0), Rational(2)};  // 2x^2 - 1
  const RationalFunction u(Polynomial::one(), den);
  const RationalFunction one_plus_u = RationalFunction::one() + u;
  return DiffOperator({RationalFunction(Rational(4)) * u * one_plus_u + RationalFunction(Rational(2)),
                       -(RationalFunction(kX * Rational(4)) * u * one_plus_u), u});
}

CheckResult operator_identity_check(const std::string& name, const DiffOperator& got,
                                    const DiffOperator& expected) {
  if (got == expected) return CheckResult::pass(name, "exact operator equality");
  return CheckResult::fail(name, "got " + to_string(got) + ", expected " + to_string(expected));
}

std::string family_poly_label(FamilyId f) {
  switch (f) {
    case FamilyId::Hermite: return "H_n";
    case FamilyId::OneGap: return "p_n";
    case FamilyId::TwoGap: return "q_n";
  }
  return "?";
}

Polynomial family_poly(FamilyId f, int n) {
  return f == FamilyId::Hermite ? hermite_poly(n) : wronskian_eigen_poly(f, n);
}

}  // namespace

SectionReport factorization_suite(const VerifyOptions&) {
  SectionReport section{"factorizations", {}};
  const DiffOperator a({RationalFunction(Rational(-2)),
                        RationalFunction(Polynomial::one(), kX)});  // (1/x) d - 2
  const DiffOperator b({RationalFunction(Rational(-1)), RationalFunction(kX)});  // x d - 1
  const DiffOperator two = DiffOperator::identity() * Rational(2);
  section.checks.push_back(operator_identity_check(
      "((1/x)d - 2)(xd - 1) = H + 2", a * b, family_operator(FamilyId::Hermite) + two));
  section.checks.push_back(operator_identity_check(
      "(xd - 1)((1/x)d - 2) = L + 2", b * a, family_operator(FamilyId::OneGap) + two));
  return section;
}

SectionReport intertwine_suite(const VerifyOptions& opts) {
  SectionReport section{"intertwiners", {}};
  const DiffOperator h = family_operator(FamilyId::Hermite);
  const DiffOperator lt = family_operator(FamilyId::TwoGap);
  const DiffOperator t = displayed_t();
  const DiffOperator s = displayed_s();

  const DiffOperator rt = intertwine_residual(lt, h, t);
  section.checks.push_back(
      rt.is_zero() ? CheckResult::pass("Lt T = T H with T = (2x^2-1)d^2 - 4xd", "residual 0")
                   : CheckResult::fail("Lt T = T H with T = (2x^2-1)d^2 - 4xd",
                                       "residual " + to_string(rt)));
  const DiffOperator rs = intertwine_residual(h, lt, s);
  section.checks.push_back(
      rs.is_zero() ? CheckResult::pass("H S = S Lt with the nested-coefficient S", "residual 0")
                   : CheckResult::fail("H S = S Lt with the nested-coefficient S",
                                       "residual " + to_string(rs), to_json(rs)));

  // T converts H_n into q_n up to a scalar; both vanish exactly at n = 0, 3
  const int count = opts.n_max + 1;
  SweepOutcome sweep(count);
  sweep_parallel(
      count,
      [&](int n) {
        const RationalFunction th = t.apply(hermite_poly(n));
        const Polynomial q = wronskian_eigen_poly(FamilyId::TwoGap, n);
        if (!th.is_polynomial()) {
          sweep.problems[static_cast<size_t>(n)] = "T H_n not polynomial at n=" + std::to_string(n);
          return;
        }
        const Polynomial thp = th.to_polynomial();
        const bool both_zero = thp.is_zero() && q.is_zero();
        const bool expected_zero = (n == 0 || n == 3);
        if (both_zero != expected_zero) {
          sweep.problems[static_cast<size_t>(n)] =
              "zero pattern mismatch at n=" + std::to_string(n);
          return;
        }
        if (both_zero) return;
        if (thp.is_zero() || q.is_zero() || thp.degree() != q.degree()) {
          sweep.problems[static_cast<size_t>(n)] = "not proportional at n=" + std::to_string(n);
          return;
        }
        const Rational scalar = thp.leading_coeff() / q.leading_coeff();
        if (thp != q * scalar)
          sweep.problems[static_cast<size_t>(n)] = "not proportional at n=" + std::to_string(n);
      },
      opts.threads);
  section.checks.push_back(sweep.collapse(
      "T H_n is an exact scalar multiple of q_n",
      "n <= " + std::to_string(opts.n_max) + ", zero exactly at n in {0, 3}"));
  return section;
}

SectionReport eigen_suite(const VerifyOptions& opts) {
  SectionReport section{"eigenchecks", {}};
  for (FamilyId f : {FamilyId::Hermite, FamilyId::OneGap, FamilyId::TwoGap}) {
    const DiffOperator op = family_operator(f);
    const int count = opts.n_max + 1;
    SweepOutcome sweep(count);
    sweep_parallel(
        count,
        [&](int n) {
          const Polynomial p = family_poly(f, n);
          const RationalFunction r = op.apply(p) + RationalFunction(p * Rational(2 * n));
          if (!r.is_zero())
            sweep.problems[static_cast<size_t>(n)] =
                "nonzero residual at n=" + std::to_string(n) + ": " + to_string(r);
        },
        opts.threads);
    section.checks.push_back(
        sweep.collapse("(" + family_name(f) + " + 2n) " + family_poly_label(f) + " = 0",
                       "exact, n <= " + std::to_string(opts.n_max)));
  }

  const int n_psi = std::min(20, opts.n_max);
  {
    const DiffOperator h = family_operator(FamilyId::Hermite);
    SweepOutcome sweep(n_psi + 1);
    sweep_parallel(
        n_psi + 1,
        [&](int n) {
          const TruncatedSeries psi = psi_family(n, opts.order);
          const TruncatedSeries r = h.apply(psi) + psi * Rational(2 * n);
          if (!r.is_zero())
            sweep.problems[static_cast<size_t>(n)] = "nonzero residual at n=" + std::to_string(n);
        },
        opts.threads);
    section.checks.push_back(sweep.collapse("(H + 2n) psi_n = 0 to truncation",
                                            "n <= " + std::to_string(n_psi) + ", order " +
                                                std::to_string(opts.order)));
  }

  {
    // psi_n parity is opposite to H_n: even iff n odd
    SweepOutcome sweep(n_psi + 1);
    sweep_parallel(
        n_psi + 1,
        [&](int n) {
          const TruncatedSeries psi = psi_family(n, opts.order);
          for (int e = std::max(0, psi.low_order()); e <= psi.trunc_order(); ++e) {
            const bool even_exp = (e % 2 == 0);
            const bool want_even = (n % 2 == 1);
            if (!psi.coeff(e).is_zero() && even_exp != want_even) {
              sweep.problems[static_cast<size_t>(n)] =
                  "parity violation at n=" + std::to_string(n) + ", x^" + std::to_string(e);
              return;
            }
          }
        },
        opts.threads);
    section.checks.push_back(
        sweep.collapse("psi_n parity is opposite to H_n", "alternating, n <= " +
                                                              std::to_string(n_psi)));
  }

  for (FamilyId f : {FamilyId::OneGap, FamilyId::TwoGap}) {
    SweepOutcome sweep(n_psi + 1);
    sweep_parallel(
        n_psi + 1,
        [&](int n) {
          try {
            series_family(f, n, Rational(1), Rational(1), opts.order);
          } catch (const Error& e) {
            sweep.problems[static_cast<size_t>(n)] = e.what();
          }
        },
        opts.threads);
    section.checks.push_back(
        sweep.collapse("(" + family_name(f) + " + 2n) phi_n = 0 to truncation",
                       "closed-form series, n <= " + std::to_string(n_psi) + ", order " +
                           std::to_string(opts.order)));
  }
  return section;
}

SectionReport recursion_suite(const VerifyOptions& opts) {
  SectionReport section{"recursions", {}};
  const int n_hi = std::max(1, opts.n_max);

  for (FamilyId f : {FamilyId::Hermite, FamilyId::OneGap, FamilyId::TwoGap}) {
    const NRecursion rec = builtin_recursion(f);
    const RecursionReport report = check_recursion_poly(
        rec, [&](int n) { return family_poly(f, n); }, 1, n_hi, family_name(f));
    const std::string name = family_name(f) + " polynomial recursion";
    section.checks.push_back(report.all_zero()
                                 ? CheckResult::pass(name, "exact, n in [1, " +
                                                               std::to_string(n_hi) + "]",
                                                     to_json(report))
                                 : CheckResult::fail(name, "nonzero residual", to_json(report)));
  }

  // psi recursion at n = 0 is out of contract under this normalization:
  // psi_1 has a constant term while 2x psi_0 does not
  section.checks.push_back(CheckResult::skip(
      "hermite series recursion at n=0",
      "out of contract: the relation starts at n=1 under the psi normalization"));

  const int n_series = std::min(20, opts.n_max);
  {
    const NRecursion rec = builtin_recursion(FamilyId::Hermite);
    Lcg lcg(opts.seed);
    bool ok = true;
    std::string details;
    Json bundles = Json::array();
    for (int pair_idx = 0; pair_idx < 3; ++pair_idx) {
      const Rational a0 = lcg.next_nonzero_rational();
      const Rational b0 = lcg.next_nonzero_rational();
      std::vector<TruncatedSeries> members;
      for (int n = 0; n <= n_series + 1; ++n)
        members.push_back(TruncatedSeries::from_polynomial(hermite_poly(n), opts.order) * a0 +
                          psi_family(n, opts.order) * b0);
      const RecursionReport report = check_recursion_series(
          rec, [&](int n) { return members[static_cast<size_t>(n)]; }, 1, n_series,
          "hermite a0 H_n + b0 psi_n, a0=" + a0.to_string() + " b0=" + b0.to_string());
      int min_order = std::numeric_limits<int>::max();
      for (const auto& c : report.per_n) min_order = std::min(min_order, c.valid_order);
      if (!report.all_zero() || min_order < opts.order - 2) {
        ok = false;
        details = "failed for (a0, b0) = (" + a0.to_string() + ", " + b0.to_string() + ")";
      }
      bundles.push_back(to_json(report));
    }
    section.checks.push_back(
        ok ? CheckResult::pass("hermite bundle recursion (3 seeded pairs)",
                               "zero through order >= " + std::to_string(opts.order - 2) +
                                   ", n in [1, " + std::to_string(n_series) + "]",
                               bundles)
           : CheckResult::fail("hermite bundle recursion (3 seeded pairs)", details, bundles));
  }

  {
    Lcg lcg(opts.seed + 1);
    FamilySeeds seeds;
    for (int i = 0; i < 2; ++i) seeds.alpha_seeds.push_back(lcg.next_nonzero_rational());
    for (int i = 0; i < 4; ++i) seeds.beta_seeds.push_back(lcg.next_nonzero_rational());
    const int hi = std::max(4, n_series);
    auto [alpha, beta] = family_parameter_chain(FamilyId::OneGap, seeds, hi + 2);
    const NRecursion rec = builtin_recursion(FamilyId::OneGap);
    const RecursionReport report = check_recursion_series(
        rec,
        [&](int n) {
          return family_even_basis(FamilyId::OneGap, n, opts.order) * alpha[static_cast<size_t>(n)] +
                 family_odd_basis(FamilyId::OneGap, n, opts.order) * beta[static_cast<size_t>(n)];
        },
        4, hi, "one-gap seeded series family");
    section.checks.push_back(
        report.all_zero()
            ? CheckResult::pass("one-gap series recursion, free seeds",
                                "zero for n in [4, " + std::to_string(hi) + "]", to_json(report))
            : CheckResult::fail("one-gap series recursion, free seeds", "nonzero residual",
                                to_json(report)));
  }

  {
    Lcg lcg(opts.seed + 2);
    FamilySeeds seeds;
    for (int i = 0; i < 3; ++i) seeds.alpha_seeds.push_back(lcg.next_nonzero_rational());
    for (int i = 0; i < 3; ++i) seeds.beta_seeds.push_back(lcg.next_nonzero_rational());
    // the imposed two-gap constraints: beta~{n+3} = -4n(n+1) alpha~n, n = 0,1,2
    seeds.beta_seeds.push_back(Rational(0));
    seeds.beta_seeds.push_back(seeds.alpha_seeds[1] * Rational(-8));
    seeds.beta_seeds.push_back(seeds.alpha_seeds[2] * Rational(-24));
    const int hi = std::max(6, n_series);
    auto [alpha, beta] = family_parameter_chain(FamilyId::TwoGap, seeds, hi + 3);
    const NRecursion rec = builtin_recursion(FamilyId::TwoGap);
    const RecursionReport report = check_recursion_series(
        rec,
        [&](int n) {
          return family_even_basis(FamilyId::TwoGap, n, opts.order) * alpha[static_cast<size_t>(n)] +
                 family_odd_basis(FamilyId::TwoGap, n, opts.order) * beta[static_cast<size_t>(n)];
        },
        6, hi, "two-gap seeded series family under the imposed constraints");
    section.checks.push_back(
        report.all_zero()
            ? CheckResult::pass("two-gap series recursion under beta~{n+3} = -4n(n+1) alpha~n",
                                "zero for n in [6, " + std::to_string(hi) + "]", to_json(report))
            : CheckResult::fail("two-gap series recursion under beta~{n+3} = -4n(n+1) alpha~n",
                                "nonzero residual", to_json(report)));
  }
  return section;
}

SectionReport params_suite(const VerifyOptions& opts) {
  SectionReport section{"parameter-constraints", {}};
  const int order = std::max(opts.order, 40);

  auto expect_set = [&](const std::string& name, FamilyId f, int lo, int hi,
                        const ConstraintSet& expected) {
    const ConstraintSet got = solve_free_params(f, builtin_recursion(f), lo, hi, order);
    if (got == expected)
      section.checks.push_back(CheckResult::pass(
          name, got.empty() ? "no constraints" : got.render(), to_json(got)));
    else
      section.checks.push_back(
          CheckResult::fail(name, "got: " + got.render() + " | expected: " + expected.render(),
                            to_json(got)));
  };

  // two-gap rows n in [6,8] pin exactly beta~3 = 0, beta~4 = -8 alpha~1,
  // beta~5 = -24 alpha~2 (constrained-seed indices 3..5)
  {
    RationalRow r1(9), r2(9), r3(9);
    r1[6] = Rational(1);
    r2[1] = Rational(8);
    r2[7] = Rational(1);
    r3[2] = Rational(24);
    r3[8] = Rational(1);
    expect_set("two-gap constraints from rows n in [6, 8]", FamilyId::TwoGap, 6, 8,
               make_constraint_set(FamilyId::TwoGap, {r1, r2, r3}));
  }
  expect_set("one-gap rows n in [4, 20]: all seeds free", FamilyId::OneGap, 4, 20,
             make_constraint_set(FamilyId::OneGap, {}));
  expect_set("hermite rows n in [1, 10]: a0, b0 free", FamilyId::Hermite, 1, 10,
             make_constraint_set(FamilyId::Hermite, {}));

  // the stricter systems demanded by rows below the contract windows,
  // frozen from an independent computation
  {
    RationalRow r1(9), r2(9), r3(9), r4(9), r5(9), r6(9);
    r1[1] = Rational(1);                       // alpha~1 = 0
    r2[2] = Rational(1); r2[8] = Rational(1, 24);  // alpha~2 + beta~5/24 = 0
    r3[4] = Rational(1); r3[8] = Rational(1, 12);  // beta~1 + beta~5/12 = 0
    r4[5] = Rational(1);                       // beta~2 = 0
    r5[6] = Rational(1);                       // beta~3 = 0
    r6[7] = Rational(1);                       // beta~4 = 0
    expect_set("two-gap rows n in [3, 5]: the stricter rank-6 system", FamilyId::TwoGap, 3, 5,
               make_constraint_set(FamilyId::TwoGap, {r1, r2, r3, r4, r5, r6}));
  }
  {
    RationalRow r1(6), r2(6), r3(6);
    r1[1] = Rational(1);                        // alpha~1 = 0
    r2[2] = Rational(1); r2[4] = Rational(-1, 4);  // beta~0 - beta~2/4 = 0
    r3[3] = Rational(1);                        // beta~1 = 0
    expect_set("one-gap rows n in [1, 3]: the stricter rank-3 system", FamilyId::OneGap, 1, 3,
               make_constraint_set(FamilyId::OneGap, {r1, r2, r3}));
  }
  return section;
}

SectionReport hyp_suite(const VerifyOptions& opts) {
  SectionReport section{"hypergeometric-identities", {}};
  const int n_max = std::min(12, opts.n_max);
  const int order = std::max(opts.order, 24);
  const auto checks = hypergeometric_identity_checks(n_max, order);
  for (const char* id : {"xd-shift-even", "xd-shift-odd", "second-solution-quadrature"}) {
    std::string problem;
    Json data = Json::array();
    for (const auto& c : checks) {
      if (c.identity != id) continue;
      data.push_back(Json{{"n", c.n}, {"isZero", c.zero_residual}, {"validOrder", c.valid_order}});
      if (!c.zero_residual)
        problem = "nonzero residual at n=" + std::to_string(c.n);
      else if (c.valid_order < 20)
        problem = "certified order " + std::to_string(c.valid_order) + " < 20 at n=" +
                  std::to_string(c.n);
    }
    section.checks.push_back(problem.empty()
                                 ? CheckResult::pass(id, "coefficient-wise to order >= 20, n <= " +
                                                             std::to_string(n_max),
                                                     data)
                                 : CheckResult::fail(id, problem, data));
  }
  return section;
}

SectionReport gauge_suite(const VerifyOptions&) {
  SectionReport section{"gauge-conjugations", {}};
  const RationalFunction one = RationalFunction::one();

  // h = e^{x^2/2}: H -> d^2 - x^2 + 1
  {
    const DiffOperator got =
        family_operator(FamilyId::Hermite).gauge(family_gauge_weight(FamilyId::Hermite));
    const DiffOperator expected({RationalFunction(Polynomial{Rational(1), Rational(0),
                                                             Rational(-1)}),
                                 RationalFunction::zero(), one});
    section.checks.push_back(
        operator_identity_check("gauge(H, x) = d^2 - x^2 + 1", got, expected));
  }
  // h = x e^{x^2/2}: L -> d^2 - x^2 - 1 - 2/x^2
  {
    const DiffOperator got =
        family_operator(FamilyId::OneGap).gauge(family_gauge_weight(FamilyId::OneGap));
    const Polynomial num{Rational(-2), Rational(0), Rational(-1), Rational(0), Rational(-1)};
    const DiffOperator expected(
        {RationalFunction(num, Polynomial{Rational(0), Rational(0), Rational(1)}),
         RationalFunction::zero(), one});
    section.checks.push_back(
        operator_identity_check("gauge(L, 1/x + x) = d^2 - x^2 - 1 - 2/x^2", got, expected));
  }
  // h = e^{x^2/2}(2x^2-1): Lt -> d^2 - x^2 - 3 + 2 (d/dx)[4x/(2x^2-1)]
  {
    const DiffOperator got =
        family_operator(FamilyId::TwoGap).gauge(family_gauge_weight(FamilyId::TwoGap));
    const Polynomial den{Rational(-1), Rational(0), Rational(2)};  // 2x^2-1
    const RationalFunction correction =
        RationalFunction(kX * Rational(4), den).derivative() * Rational(2);
    const RationalFunction zero_order =
        RationalFunction(Polynomial{Rational(-3), Rational(0), Rational(-1)}) + correction;
    const DiffOperator expected({zero_order, RationalFunction::zero(), one});
    section.checks.push_back(operator_identity_check(
        "gauge(Lt, x + 4x/(2x^2-1)) = d^2 - x^2 - 3 + 2 d/dx[4x/(2x^2-1)]", got, expected));
  }
  return section;
}

SectionReport adcond_suite(const VerifyOptions&) {
  SectionReport section{"ad-conditions", {}};
  for (const auto& [identity, expected_zero] : builtin_ad_suite()) {
    const DiffOperator residual = ad_identity_residual(identity);
    const bool ok = residual.is_zero() == expected_zero;
    const std::string detail = expected_zero
                                   ? (ok ? "residual 0" : "residual " + to_string(residual))
                                   : (ok ? "residual nonzero as expected: " +
                                               to_string(residual)
                                         : "residual unexpectedly zero");
    Json data = ad_check_to_json(identity, residual);
    section.checks.push_back(ok ? CheckResult::pass(identity.name, detail, std::move(data))
                                : CheckResult::fail(identity.name, detail, std::move(data)));
  }

  // Theta on the ad side must be the recursion-side Theta
  {
    const auto suite = builtin_ad_suite();
    const bool coherent = suite[0].first.theta == builtin_recursion(FamilyId::Hermite).theta &&
                          suite[1].first.theta == builtin_recursion(FamilyId::OneGap).theta &&
                          suite[3].first.theta == builtin_recursion(FamilyId::TwoGap).theta;
    section.checks.push_back(coherent
                                 ? CheckResult::pass("Theta agrees across ad and recursion sides")
                                 : CheckResult::fail("Theta agrees across ad and recursion sides"));
  }
  // tau = Theta' vanishing pattern: at x=0 (one-gap), at the two
  // roots of 2x^2-1 (two-gap)
  {
    const Polynomial tau1 = builtin_recursion(FamilyId::OneGap).theta.derivative();
    const Polynomial tau2 = builtin_recursion(FamilyId::TwoGap).theta.derivative();
    const bool div1 = Polynomial::divmod(tau1, kX).second.is_zero();
    const bool div2 =
        Polynomial::divmod(tau2, Polynomial{Rational(-1), Rational(0), Rational(2)}).second.is_zero();
    section.checks.push_back(div1 && div2
                                 ? CheckResult::pass("tau = Theta' vanishing pattern",
                                                     "x | tau (one-gap), (2x^2-1) | tau (two-gap)")
                                 : CheckResult::fail("tau = Theta' vanishing pattern"));
  }
  // iterated ad equals the binomial expansion sum_i (-1)^i C(k,i) A^{k-i} Y A^i
  {
    bool ok = true;
    for (const auto& [identity, expected_zero] : builtin_ad_suite()) {
      (void)expected_zero;
      const DiffOperator y = DiffOperator::mul(RationalFunction(identity.theta));
      std::vector<DiffOperator> op_pow{DiffOperator::identity()};
      for (int i = 1; i <= 4; ++i) op_pow.push_back(op_pow.back() * identity.op);
      for (int k = 0; k <= 4 && ok; ++k) {
        DiffOperator direct;
        for (int i = 0; i <= k; ++i) {
          const Rational c{mpz_class((i % 2 == 0 ? 1 : -1) * binomial(k, i))};
          direct = direct + op_pow[static_cast<size_t>(k - i)] * y * op_pow[static_cast<size_t>(i)] * c;
        }
        ok = ok && (direct == ad_power(identity.op, y, k));
      }
    }
    section.checks.push_back(
        ok ? CheckResult::pass("ad^k iteration equals the binomial expansion", "k <= 4")
           : CheckResult::fail("ad^k iteration equals the binomial expansion"));
  }
  return section;
}

SectionReport oracle_suite(const VerifyOptions& opts) {
  SectionReport section{"oracle-cross-checks", {}};
  const int n_max = std::min(12, opts.n_max);
  const int order = opts.order;

  for (FamilyId f : {FamilyId::Hermite, FamilyId::OneGap, FamilyId::TwoGap}) {
    const DiffOperator op = family_operator(f);
    SweepOutcome sweep(n_max + 1);
    sweep_parallel(
        n_max + 1,
        [&](int n) {
          try {
            const auto basis = series_kernel_oracle(op, Rational(-2 * n), order);
            TruncatedSeries even = TruncatedSeries::zero(order);
            TruncatedSeries odd = TruncatedSeries::zero(order);
            if (f == FamilyId::Hermite) {
              even = TruncatedSeries::from_polynomial(hermite_poly(n), order);
              odd = psi_family(n, order);
            } else {
              even = family_even_basis(f, n, order);
              odd = family_odd_basis(f, n, order);
            }
            if (!kernel_contains(basis, even, order) || !kernel_contains(basis, odd, order))
              sweep.problems[static_cast<size_t>(n)] =
                  "closed form outside the oracle kernel at n=" + std::to_string(n);
          } catch (const Error& e) {
            sweep.problems[static_cast<size_t>(n)] =
                std::string(e.what()) + " at n=" + std::to_string(n);
          }
        },
        opts.threads);
    section.checks.push_back(sweep.collapse(
        family_name(f) + " closed forms lie in the oracle kernel",
        "dimension 2, membership by exact linear solve, n <= " + std::to_string(n_max)));
  }

  // the polynomial-recovery choice of seeds reproduces p_n
  {
    FamilySeeds seeds;
    seeds.alpha_seeds = {Rational(-1), Rational(0)};
    seeds.beta_seeds = {Rational(0), Rational(0), Rational(0), Rational(16)};
    auto [alpha, beta] = family_parameter_chain(FamilyId::OneGap, seeds, n_max);
    std::string problem;
    for (int n = 0; n <= n_max; ++n) {
      const TruncatedSeries phi =
          family_even_basis(FamilyId::OneGap, n, order) * alpha[static_cast<size_t>(n)] +
          family_odd_basis(FamilyId::OneGap, n, order) * beta[static_cast<size_t>(n)];
      const TruncatedSeries p =
          TruncatedSeries::from_polynomial(wronskian_eigen_poly(FamilyId::OneGap, n), order);
      if (!phi.agrees_with(p)) {
        problem = "mismatch at n=" + std::to_string(n);
        break;
      }
    }
    section.checks.push_back(
        problem.empty()
            ? CheckResult::pass("one-gap polynomial recovery",
                                "alpha~0=-1, beta~3=16 seeds reproduce p_n, n <= " +
                                    std::to_string(n_max))
            : CheckResult::fail("one-gap polynomial recovery", problem));
  }
  return section;
}

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {"factorization", "intertwine", "eigen",
                                                 "recursion",     "params",     "hyp",
                                                 "gauge",         "adcond",     "oracle"};
  return names;
}

VerificationReport run_verify(const std::string& suite, const VerifyOptions& opts) {
  VerificationReport report;
  report.timestamp_utc = utc_timestamp();
  report.options = Json{{"suite", suite},
                        {"nMax", opts.n_max},
                        {"order", opts.order},
                        {"seed", opts.seed}};
  auto run_one = [&](const std::string& name) {
    if (name == "factorization") return factorization_suite(opts);
    if (name == "intertwine") return intertwine_suite(opts);
    if (name == "eigen") return eigen_suite(opts);
    if (name == "recursion") return recursion_suite(opts);
    if (name == "params") return params_suite(opts);
    if (name == "hyp") return hyp_suite(opts);
    if (name == "gauge") return gauge_suite(opts);
    if (name == "adcond") return adcond_suite(opts);
    if (name == "oracle") return oracle_suite(opts);
    throw Error("unknown suite: " + name);
  };
  if (suite == "all") {
    for (const auto& name : all_suite_names()) report.sections.push_back(run_one(name));
  } else {
    report.sections.push_back(run_one(suite));
  }
  return report;
}

}  // namespace bispec
