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

#include "bispec/rational_function.hpp"

namespace bispec {

/// The fixed linear congruential generator behind every seeded sweep:
/// state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64),
/// drawing the top 32 bits. Identical seeds give identical draws everywhere.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed = 0) : state_(seed) {}

  std::uint32_t next_u32() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// Uniform draw in [lo, hi].
  long next_in(long lo, long hi) {
    return lo + static_cast<long>(next_u32() % static_cast<std::uint32_t>(hi - lo + 1));
  }

  /// Rational with numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational next_rational(long max_num = 9, long max_den = 9) {
    return Rational(next_in(-max_num, max_num), next_in(1, max_den));
  }

  Rational next_nonzero_rational(long max_num = 9, long max_den = 9) {
    for (;;) {
      Rational r = next_rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Polynomial next_polynomial(int max_deg, long max_num = 5, long max_den = 3) {
    std::vector<Rational> c(static_cast<size_t>(next_in(0, max_deg)) + 1);
    for (auto& x : c) x = next_rational(max_num, max_den);
    return Polynomial(std::move(c));
  }

  Polynomial next_nonzero_polynomial(int max_deg, long max_num = 5, long max_den = 3) {
    for (;;) {
      Polynomial p = next_polynomial(max_deg, max_num, max_den);
      if (!p.is_zero()) return p;
    }
  }

  RationalFunction next_rational_function(int max_deg = 2) {
    return RationalFunction(next_polynomial(max_deg), next_nonzero_polynomial(max_deg));
  }

 private:
  std::uint64_t state_;
};

}  // namespace bispec
