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

#include "bispec/json_io.hpp"

#include "bispec/format.hpp"

namespace bispec {

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).to_string());
  return arr;
}

Json to_json(const TruncatedSeries& s) {
  Json j;
  j["lowOrder"] = s.low_order();
  j["truncOrder"] = s.trunc_order();
  Json arr = Json::array();
  for (int i = s.low_order(); i <= s.trunc_order(); ++i) arr.push_back(s.coeff(i).to_string());
  j["coeffs"] = arr;
  return j;
}

Json to_json(const RationalFunction& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

Json to_json(const DiffOperator& op) {
  Json j;
  j["order"] = op.order();
  Json arr = Json::array();
  for (int k = 0; k <= op.order(); ++k) arr.push_back(to_json(op.coeff(k)));
  j["coeffs"] = arr;
  return j;
}

Json to_json(const RecursionReport& r) {
  Json j;
  j["family"] = r.family;
  j["theta"] = to_string(r.theta);
  j["nRange"] = Json::array({r.n_begin, r.n_end});
  Json results = Json::array();
  for (const auto& c : r.per_n) {
    Json e;
    e["n"] = c.n;
    e["isZero"] = c.is_zero;
    if (c.valid_order != std::numeric_limits<int>::max()) e["validOrder"] = c.valid_order;
    if (!c.is_zero) e["residual"] = c.residual;
    results.push_back(std::move(e));
  }
  j["results"] = results;
  return j;
}

Json to_json(const ConstraintSet& c) {
  Json j;
  j["seeds"] = c.seed_names;
  Json rows = Json::array();
  for (const auto& row : c.rows) {
    int last = -1;
    for (size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) last = static_cast<int>(i);
    Json e;
    e["lhs"] = c.seed_names[static_cast<size_t>(last)];
    // rhs: the row solved for its final seed, as coefficient terms
    const Rational lead = row[static_cast<size_t>(last)];
    std::string rhs;
    bool any = false;
    for (size_t i = 0; i < row.size(); ++i) {
      if (static_cast<int>(i) == last || row[i].is_zero()) continue;
      const Rational coeff = -row[i] / lead;
      if (any) rhs += coeff.sign() < 0 ? " - " : " + ";
      else if (coeff.sign() < 0) rhs += "-";
      const Rational mag = coeff.abs();
      if (!mag.is_one()) rhs += mag.to_string() + "*";
      rhs += c.seed_names[i];
      any = true;
    }
    e["rhs"] = any ? rhs : "0";
    rows.push_back(std::move(e));
  }
  j["constraints"] = rows;
  return j;
}

Json ad_check_to_json(const AdIdentity& id, const DiffOperator& residual) {
  Json j;
  j["name"] = id.name;
  j["thetaDegree"] = id.theta.degree();
  Json powers = Json::array();
  Json coefficients = Json::array();
  for (const auto& [power, coeff] : id.terms) {
    powers.push_back(power);
    coefficients.push_back(coeff.to_string());
  }
  j["powers"] = powers;
  j["coefficients"] = coefficients;
  j["residualIsZero"] = residual.is_zero();
  j["residualOrder"] = residual.order();
  if (!residual.is_zero()) j["residual"] = to_string(residual);
  return j;
}

}  // namespace bispec
