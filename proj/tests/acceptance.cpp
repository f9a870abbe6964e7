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

// Acceptance gate: one pass/fail line per criterion, full scale, with the
// stated runtime budgets. Exits nonzero if any criterion fails. argv[1] must
// point at the CLI binary (used by criterion 11).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "bispec/adcond.hpp"
#include "bispec/constraints.hpp"
#include "bispec/format.hpp"
#include "bispec/kernel_oracle.hpp"
#include "bispec/lcg.hpp"
#include "bispec/verify.hpp"

using namespace bispec;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& note = "") {
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              note.empty() ? "" : " -- ", note.c_str());
  if (!ok) ++g_failures;
}

double run_timed_ms(const std::function<bool()>& body, bool& ok) {
  const auto t0 = std::chrono::steady_clock::now();
  ok = body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

const Polynomial kX = Polynomial::variable();

Polynomial eigenpoly(FamilyId f, int n) {
  return f == FamilyId::Hermite ? hermite_poly(n) : wronskian_eigen_poly(f, n);
}

// ---- criteria ----

void criterion_1_factorizations() {
  bool ok = false;
  const double ms = run_timed_ms(
      [&] {
        const DiffOperator a({RationalFunction(Rational(-2)),
                              RationalFunction(Polynomial::one(), kX)});
        const DiffOperator b({RationalFunction(Rational(-1)), RationalFunction(kX)});
        const DiffOperator two = DiffOperator::identity() * Rational(2);
        return a * b == family_operator(FamilyId::Hermite) + two &&
               b * a == family_operator(FamilyId::OneGap) + two;
      },
      ok);
  report(1, "both Darboux factorization products hold exactly", ok && ms < 10.0,
         "zero residual, " + std::to_string(ms) + " ms (< 10 ms)");
}

void criterion_2_intertwining() {
  bool ok = false;
  bool s_zero = false;
  const double ms = run_timed_ms(
      [&] {
        const DiffOperator h = family_operator(FamilyId::Hermite);
        const DiffOperator lt = family_operator(FamilyId::TwoGap);
        const DiffOperator t({RationalFunction::zero(), RationalFunction(kX * Rational(-4)),
                              RationalFunction(Polynomial{Rational(-1), Rational(0),
                                                          Rational(2)})});
        const Polynomial den{Rational(-1), Rational(0), Rational(2)};
        const RationalFunction u(Polynomial::one(), den);
        const RationalFunction opu = RationalFunction::one() + u;
        const DiffOperator s({RationalFunction(Rational(4)) * u * opu +
                                  RationalFunction(Rational(2)),
                              -(RationalFunction(kX * Rational(4)) * u * opu), u});
        s_zero = intertwine_residual(h, lt, s).is_zero();
        return intertwine_residual(lt, h, t).is_zero();
      },
      ok);
  report(2, "Lt T = T H exactly; S Lt = H S evaluated and reported", ok && ms < 50.0,
         std::string("T residual 0; nested-coefficient-S residual ") + (s_zero ? "0" : "NONZERO") + ", " +
             std::to_string(ms) + " ms (< 50 ms)");
}

void criterion_3_tables() {
  const std::vector<std::vector<long>> p_expected = {
      {-1}, {}, {2, 0, 4}, {0, 0, 0, 16}, {-12, 0, -48, 0, 48}, {0, 0, 0, -320, 0, 128},
      {120, 0, 720, 0, -1440, 0, 320}};
  const std::vector<std::vector<long>> q_expected = {
      {}, {0, -8}, {-4, 0, -8}, {}, {24, 0, 0, 0, 32}, {0, 96, 0, -128, 0, 128}};
  bool ok = true;
  for (size_t n = 0; n < p_expected.size(); ++n) {
    std::vector<Rational> c;
    for (long v : p_expected[n]) c.emplace_back(v);
    ok = ok && wronskian_eigen_poly(FamilyId::OneGap, static_cast<int>(n)) == Polynomial(c);
  }
  for (size_t n = 0; n < q_expected.size(); ++n) {
    std::vector<Rational> c;
    for (long v : q_expected[n]) c.emplace_back(v);
    ok = ok && wronskian_eigen_poly(FamilyId::TwoGap, static_cast<int>(n)) == Polynomial(c);
  }
  report(3, "p_0..p_6 and q_0..q_5 match the reference tables coefficient-for-coefficient", ok);
}

void criterion_4_eigen() {
  bool ok = false;
  const double ms = run_timed_ms(
      [&] {
        for (FamilyId f : {FamilyId::Hermite, FamilyId::OneGap, FamilyId::TwoGap}) {
          const DiffOperator op = family_operator(f);
          for (int n = 0; n <= 40; ++n) {
            const Polynomial p = eigenpoly(f, n);
            if (!(op.apply(p) + RationalFunction(p * Rational(2 * n))).is_zero()) return false;
          }
        }
        return true;
      },
      ok);
  report(4, "(H+2n)H_n = (L+2n)p_n = (Lt+2n)q_n = 0 exactly for n <= 40", ok && ms < 5000.0,
         std::to_string(ms) + " ms (< 5000 ms)");
}

void criterion_5_recursions() {
  bool poly_ok = true;
  for (FamilyId f : {FamilyId::OneGap, FamilyId::TwoGap}) {
    const RecursionReport r = check_recursion_poly(
        builtin_recursion(f), [&](int n) { return eigenpoly(f, n); }, 1, 40, family_name(f));
    poly_ok = poly_ok && r.all_zero();
  }
  bool psi_ok = true;
  Lcg lcg(0);
  const int order = 60;
  for (int pair_idx = 0; pair_idx < 3; ++pair_idx) {
    const Rational a0 = lcg.next_nonzero_rational();
    const Rational b0 = lcg.next_nonzero_rational();
    std::vector<TruncatedSeries> members;
    for (int n = 0; n <= 21; ++n)
      members.push_back(TruncatedSeries::from_polynomial(hermite_poly(n), order) * a0 +
                        psi_family(n, order) * b0);
    const RecursionReport r = check_recursion_series(
        builtin_recursion(FamilyId::Hermite),
        [&](int n) { return members[static_cast<size_t>(n)]; }, 1, 20, "bundle");
    psi_ok = psi_ok && r.all_zero();
    for (const auto& c : r.per_n) psi_ok = psi_ok && c.valid_order >= 58;
  }
  report(5, "recursions: one-gap and two-gap rows exact on [1,40]; psi bundle zero through "
            "order 58 on [1,20] for 3 seeded pairs",
         poly_ok && psi_ok);
}

void criterion_6_series_families() {
  bool eigen_ok = true;
  for (FamilyId f : {FamilyId::OneGap, FamilyId::TwoGap}) {
    for (int n = 0; n <= 20 && eigen_ok; ++n) {
      try {
        series_family(f, n, Rational(1), Rational(1), 60);
      } catch (const Error&) {
        eigen_ok = false;
      }
    }
  }
  bool oracle_ok = true;
  for (FamilyId f : {FamilyId::OneGap, FamilyId::TwoGap}) {
    const DiffOperator op = family_operator(f);
    for (int n = 0; n <= 12 && oracle_ok; ++n) {
      try {
        const auto basis = series_kernel_oracle(op, Rational(-2 * n), 60);
        oracle_ok = kernel_contains(basis, family_even_basis(f, n, 60), 60) &&
                    kernel_contains(basis, family_odd_basis(f, n, 60), 60);
      } catch (const Error&) {
        oracle_ok = false;
      }
    }
  }
  report(6, "closed-form phi_n satisfy their eigen-equations (n <= 20) and lie in the "
            "independent oracle kernel (n <= 12)",
         eigen_ok && oracle_ok);
}

void criterion_7_constraints() {
  // The system beta~{n+3} = -4n(n+1) alpha~n pins the seeds with
  // indices 3..5; the recursion rows that see exactly those seeds are n >= 6.
  bool ok = true;
  {
    const ConstraintSet got =
        solve_free_params(FamilyId::TwoGap, builtin_recursion(FamilyId::TwoGap), 6, 8, 60);
    RationalRow r1(9), r2(9), r3(9);
    r1[6] = Rational(1);
    r2[1] = Rational(8);
    r2[7] = Rational(1);
    r3[2] = Rational(24);
    r3[8] = Rational(1);
    ok = ok && got == make_constraint_set(FamilyId::TwoGap, {r1, r2, r3}) && got.rank() == 3;
  }
  ok = ok &&
       solve_free_params(FamilyId::OneGap, builtin_recursion(FamilyId::OneGap), 4, 20, 60)
           .empty();
  ok = ok &&
       solve_free_params(FamilyId::Hermite, builtin_recursion(FamilyId::Hermite), 1, 10, 60)
           .empty();
  report(7, "constraint discovery: two-gap beta~{n+3} + 4n(n+1) alpha~n = 0 (rank 3, seed "
            "indices 3..5); one-gap [4,20] and hermite [1,10] free",
         ok);
}

void criterion_8_hypergeometric() {
  const auto checks = hypergeometric_identity_checks(12, 60);
  bool ok = !checks.empty();
  for (const auto& c : checks) ok = ok && c.zero_residual && c.valid_order >= 20;
  report(8, "both (xd-1) identities and the quadrature identity verify to order >= 20 for "
            "n <= 12",
         ok);
}

void criterion_9_gauge() {
  const VerifyOptions opts;
  const SectionReport section = gauge_suite(opts);
  report(9, "gauge conjugations land on the expected Schroedinger forms",
         section.failed() == 0 && section.passed() == 3);
}

void criterion_10_adcond() {
  bool ok = false;
  const double ms = run_timed_ms(
      [&] {
        const auto suite = builtin_ad_suite();
        if (suite.size() != 4) return false;
        for (const auto& [identity, expected_zero] : suite)
          if (ad_identity_residual(identity).is_zero() != expected_zero) return false;
        return true;
      },
      ok);
  report(10, "three ad-condition identities vanish; the stronger candidate is nonzero",
         ok && ms < 1000.0, std::to_string(ms) + " ms (< 1000 ms)");
}

void criterion_11_properties(const std::string& cli) {
  Lcg lcg(2026);
  bool ok = true;
  auto random_op = [&](int max_order, int max_deg) {
    std::vector<RationalFunction> c(static_cast<size_t>(lcg.next_in(0, max_order)) + 1);
    for (auto& f : c) f = RationalFunction(lcg.next_polynomial(max_deg));
    return DiffOperator(std::move(c));
  };
  for (int i = 0; i < 200 && ok; ++i) {
    const Rational a = lcg.next_rational(), b = lcg.next_rational(), c = lcg.next_rational();
    ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
         a * (b + c) == a * b + a * c;
  }
  for (int i = 0; i < 200 && ok; ++i) {
    const Polynomial p = lcg.next_polynomial(4), q = lcg.next_polynomial(4);
    ok = (p * q).derivative() == p.derivative() * q + p * q.derivative();
  }
  for (int i = 0; i < 200 && ok; ++i) {
    const RationalFunction f = lcg.next_rational_function(), g = lcg.next_rational_function();
    ok = (f * g).derivative() == f.derivative() * g + f * g.derivative();
  }
  for (int i = 0; i < 200 && ok; ++i) {
    const DiffOperator x = random_op(2, 2), y = random_op(2, 2), z = random_op(2, 2);
    const DiffOperator jacobi = commutator(x, commutator(y, z)) +
                                commutator(y, commutator(z, x)) +
                                commutator(z, commutator(x, y));
    ok = jacobi.is_zero() && (x * y) * z == x * (y * z);
  }
  for (int i = 0; i < 200 && ok; ++i) {
    const DiffOperator x = random_op(2, 2);
    const GaugeWeight w1{RationalFunction(lcg.next_polynomial(2))};
    const GaugeWeight w2{RationalFunction(lcg.next_polynomial(2))};
    ok = x.gauge(w1).gauge(w2) == x.gauge({w1.w + w2.w});
  }
  report(11, "algebra property suites pass on 200 seeded instances each", ok);

  bool cli_ok = false;
  const double ms = run_timed_ms(
      [&] {
        const int status = std::system((cli + " verify --suite all > /dev/null").c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
      },
      cli_ok);
  report(11, "`verify --suite all` at defaults exits 0", cli_ok && ms < 60000.0,
         std::to_string(ms) + " ms (< 60000 ms)");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "./bispec";
  criterion_1_factorizations();
  criterion_2_intertwining();
  criterion_3_tables();
  criterion_4_eigen();
  criterion_5_recursions();
  criterion_6_series_families();
  criterion_7_constraints();
  criterion_8_hypergeometric();
  criterion_9_gauge();
  criterion_10_adcond();
  criterion_11_properties(cli);
  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
