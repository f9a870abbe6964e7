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

#include "bispec/rational.hpp"

namespace bispec {

Rational Rational::from_string(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(s)));
    }
    mpz_class num{std::string(s.substr(0, slash))};
    mpz_class den{std::string(s.substr(slash + 1))};
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal: " + std::string(s));
  }
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

mpz_class double_factorial(long n) {
  if (n <= 0) return 1;  // empty product; covers (-1)!! and 0!!
  mpz_class r = 1;
  for (long k = n; k > 0; k -= 2) r *= k;
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace bispec
