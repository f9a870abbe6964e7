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

#include <cstdint>

#include "bispec/report.hpp"

namespace bispec {

struct VerifyOptions {
  int n_max = 40;
  int order = 60;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// The Darboux factorization products, as exact operator identities.
SectionReport factorization_suite(const VerifyOptions& opts);
/// Lt T = T H and H S = S Lt with the concrete T and S; T H_n ~ q_n sweep.
SectionReport intertwine_suite(const VerifyOptions& opts);
/// (Op + 2n) annihilates H_n, p_n, q_n (exact), psi_n and the closed-form
/// series families (to truncation).
SectionReport eigen_suite(const VerifyOptions& opts);
/// The three recursions in n, over polynomials exactly and over series
/// bundles with seeded parameters.
SectionReport recursion_suite(const VerifyOptions& opts);
/// Free-parameter constraint discovery vs the frozen expected systems.
SectionReport params_suite(const VerifyOptions& opts);
/// The Kummer-series identities, coefficient-wise.
SectionReport hyp_suite(const VerifyOptions& opts);
/// The three gauge conjugations to Schroedinger form.
SectionReport gauge_suite(const VerifyOptions& opts);
/// The ad-condition suite, including the expected-nonzero candidate.
SectionReport adcond_suite(const VerifyOptions& opts);
/// Independent kernel-solver cross-checks and polynomial recovery.
SectionReport oracle_suite(const VerifyOptions& opts);

/// Names accepted by `verify --suite`, in report order.
const std::vector<std::string>& all_suite_names();

/// Runs one suite or "all"; throws Error on an unknown name.
VerificationReport run_verify(const std::string& suite, const VerifyOptions& opts);

}  // namespace bispec
