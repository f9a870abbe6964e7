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

#include <cstdlib>
#include <exception>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bispec/errors.hpp"

namespace bispec {

/// Thread count for sweeps: BISPEC_MAX_THREADS, with 0 or unset meaning auto.
inline int sweep_threads_from_env() {
  const char* env = std::getenv("BISPEC_MAX_THREADS");
  int requested = 0;
  if (env != nullptr && *env != '\0') requested = std::atoi(env);
#ifdef _OPENMP
  if (requested <= 0) return omp_get_max_threads();
  return requested;
#else
  return requested <= 0 ? 1 : requested;
#endif
}

/// Serial reference sweep. Results land in caller-owned slots indexed by i,
/// so the outcome is identical to the parallel path by construction.
template <typename Body>
void sweep_serial(int count, const Body& body) {
  for (int i = 0; i < count; ++i) body(i);
}

/// OpenMP sweep over pure per-index work. Exceptions are captured inside the
/// parallel region and the first one is rethrown after the join.
template <typename Body>
void sweep_parallel(int count, const Body& body, int threads) {
#ifdef _OPENMP
  if (threads > 1 && count > 1) {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical
        if (first_error == nullptr) first_error = std::current_exception();
      }
    }
    if (first_error != nullptr) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)threads;
#endif
  sweep_serial(count, body);
}

}  // namespace bispec
