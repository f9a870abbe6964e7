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

// Compares the serial reference sweeps against the OpenMP path on the three
// heavy per-n workloads. Thread count comes from BISPEC_MAX_THREADS (0 = auto).

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "bispec/kernel_oracle.hpp"
#include "bispec/parallel.hpp"
#include "bispec/verify.hpp"

namespace {

using bispec::DiffOperator;
using bispec::FamilyId;
using bispec::Rational;

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void poly_eigen_item(int idx) {
  const FamilyId f = static_cast<FamilyId>(idx % 3);
  const int n = idx / 3;
  const bispec::Polynomial p =
      f == FamilyId::Hermite ? bispec::hermite_poly(n) : bispec::wronskian_eigen_poly(f, n);
  const bispec::RationalFunction r =
      bispec::family_operator(f).apply(p) + bispec::RationalFunction(p * Rational(2 * n));
  if (!r.is_zero()) std::abort();
}

void series_eigen_item(int n) {
  const FamilyId f = (n % 2 == 0) ? FamilyId::OneGap : FamilyId::TwoGap;
  bispec::series_family(f, n / 2, Rational(1), Rational(1), 60);
}

void oracle_item(int n) {
  const auto basis =
      bispec::series_kernel_oracle(bispec::family_operator(FamilyId::TwoGap), Rational(-2 * n), 60);
  if (basis.size() != 2) std::abort();
}

void run_case(const char* name, int count, void (*body)(int), int threads, int reps) {
  const double serial = time_ms([&] { bispec::sweep_serial(count, body); }, reps);
  const double parallel = time_ms([&] { bispec::sweep_parallel(count, body, threads); }, reps);
  std::printf("%-28s %4d items   serial %8.2f ms   openmp(%d) %8.2f ms   speedup %.2fx\n", name,
              count, serial, threads, parallel, serial / parallel);
}

}  // namespace

int main() {
  const int threads = bispec::sweep_threads_from_env();
  std::printf("sweep benchmark, serial reference vs OpenMP, threads=%d\n", threads);
  run_case("polynomial eigenchecks", 3 * 41, poly_eigen_item, threads, 3);
  run_case("series-family eigenchecks", 2 * 21, series_eigen_item, threads, 3);
  run_case("kernel-oracle solves", 13, oracle_item, threads, 3);
  return 0;
}
