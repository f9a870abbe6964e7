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

#include "bispec/format.hpp"

#include <sstream>
#include <vector>

namespace bispec {

namespace {

std::string power_string(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// One monomial, magnitude only; the sign is handled by the joiner.
std::string term_string(const Rational& mag, int e, const std::string& var) {
  if (e == 0) return mag.to_string();
  std::string c;
  if (!mag.is_one()) c = mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
  return c + power_string(var, e);
}

struct TermJoiner {
  std::ostringstream out;
  bool first = true;

  void add(const Rational& c, int e, const std::string& var) {
    if (c.is_zero()) return;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    out << term_string(c.abs(), e, var);
  }

  std::string str() const { return first ? "0" : out.str(); }
};

}  // namespace

std::string to_string(const Polynomial& p, const std::string& var) {
  TermJoiner j;
  for (int e = p.degree(); e >= 0; --e) j.add(p.coeff(e), e, var);
  return j.str();
}

std::string to_string(const TruncatedSeries& s, const std::string& var) {
  TermJoiner j;
  for (int e = s.low_order(); e <= s.trunc_order(); ++e) j.add(s.coeff(e), e, var);
  return j.str();
}

std::string to_string(const RationalFunction& f, const std::string& var) {
  if (f.is_zero()) return "0";
  if (f.is_polynomial()) return to_string(f.to_polynomial(), var);
  const std::string n = to_string(f.num(), var);
  const std::string d = to_string(f.den(), var);
  const bool np = f.num().degree() > 0;
  const bool dp = true;  // non-constant by is_polynomial check
  return (np ? "(" + n + ")" : n) + "/" + (dp ? "(" + d + ")" : d);
}

std::string to_string(const DiffOperator& op, const std::string& var) {
  if (op.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = op.order(); k >= 0; --k) {
    const RationalFunction& c = op.coeff(k);
    if (c.is_zero()) continue;
    const int sign = c.num().leading_coeff().sign();  // canonical den is positive-leading
    const RationalFunction mag = sign < 0 ? -c : c;
    if (first) {
      if (sign < 0) out << "-";
      first = false;
    } else {
      out << (sign < 0 ? " - " : " + ");
    }
    const std::string d = power_string("∂", k);
    if (k == 0) {
      out << to_string(mag, var);
    } else if (mag.is_one()) {
      out << d;
    } else {
      std::string cs = to_string(mag, var);
      const bool needs_parens = cs.find(' ') != std::string::npos;
      out << (needs_parens ? "(" + cs + ")" : cs) << d;
    }
  }
  return out.str();
}

}  // namespace bispec
