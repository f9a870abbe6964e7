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

#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "bispec/parallel.hpp"
#include "bispec/verify.hpp"

using namespace bispec;

TEST_SUITE("reporting") {

TEST_CASE("serial and parallel sweeps fill identical slots") {
  const int count = 64;
  std::vector<long> serial(count), parallel(count);
  auto body = [](std::vector<long>& out) {
    return [&out](int i) { out[static_cast<size_t>(i)] = static_cast<long>(i) * i - 3 * i + 7; };
  };
  sweep_serial(count, body(serial));
  sweep_parallel(count, body(parallel), 4);
  CHECK(serial == parallel);
}

TEST_CASE("exceptions escape the parallel region exactly once") {
  auto boom = [](int i) {
    if (i == 13) throw Error("boom");
  };
  CHECK_THROWS_AS(sweep_parallel(40, boom, 4), Error);
  CHECK_THROWS_AS(sweep_serial(40, boom), Error);
}

TEST_CASE("suite reports are identical across thread counts") {
  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  VerifyOptions one;
  one.n_max = 8;
  one.order = 24;
  one.threads = 1;
  VerifyOptions four = one;
  four.threads = 4;
  for (const std::string suite : {"eigen", "intertwine", "oracle"}) {
    const std::string a = run_verify(suite, one).to_json().dump();
    const std::string b = run_verify(suite, four).to_json().dump();
    CHECK(a == b);
  }
  unsetenv("SOURCE_DATE_EPOCH");
}

TEST_CASE("thread-count environment parsing") {
  setenv("BISPEC_MAX_THREADS", "3", 1);
  CHECK(sweep_threads_from_env() == 3);
  setenv("BISPEC_MAX_THREADS", "0", 1);
  CHECK(sweep_threads_from_env() >= 1);  // 0 means auto
  unsetenv("BISPEC_MAX_THREADS");
  CHECK(sweep_threads_from_env() >= 1);
}

}  // TEST_SUITE
