/*
 * Copyright 2026 The Schwarzmap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "schwarzmap/catalog.hpp"
#include "schwarzmap/verify.hpp"

namespace schwarzmap {

using json = nlohmann::json;

// Rationals serialize as exact "p/q" strings; no decimals anywhere.
inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  return parse_rational(j.get<std::string>());
}

inline json rationals_to_json(const std::vector<Rational>& qs) {
  json arr = json::array();
  for (const auto& q : qs) arr.push_back(rational_to_json(q));
  return arr;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
  std::vector<Rational> qs;
  for (const auto& item : j) qs.push_back(rational_from_json(item));
  return qs;
}

inline json fj_spec_to_json(const FjSpec& spec) {
  return json{{"x_exp", rational_to_json(spec.x_exponent)},
              {"one_minus_x_exp", rational_to_json(spec.one_minus_x_exponent)},
              {"factor", rationals_to_json(spec.factor)}};
}

inline FjSpec fj_spec_from_json(const json& j) {
  return FjSpec{rational_from_json(j.at("x_exp")),
                rational_from_json(j.at("one_minus_x_exp")),
                rationals_from_json(j.at("factor"))};
}

inline json poly_to_json(const HomogeneousBivariatePoly& p) {
  return json{{"degree", p.degree()}, {"coefficients", rationals_to_json(p.coefficients())}};
}

inline HomogeneousBivariatePoly poly_from_json(const json& j) {
  auto p = HomogeneousBivariatePoly::from_coefficients(rationals_from_json(j.at("coefficients")));
  if (p.degree() != j.at("degree").get<long>()) {
    throw std::invalid_argument("polynomial degree field disagrees with coefficient count");
  }
  return p;
}

inline json params_to_json(const HGParams& p) {
  return json{{"a", rational_to_json(p.a)},
              {"b", rational_to_json(p.b)},
              {"c", rational_to_json(p.c)}};
}

inline HGParams params_from_json(const json& j) {
  return HGParams{rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                  rational_from_json(j.at("c"))};
}

inline json case_to_json(const PolyhedralCase& cs) {
  json rows = json::array();
  for (const auto& row : cs.rows) {
    json r{{"params", params_to_json(row.params)},
           {"sign_case", sign_case_name(row.sign_case)},
           {"swapped", row.swapped},
           {"table_fj", json::array({fj_spec_to_json(row.table_fj[0]),
                                     fj_spec_to_json(row.table_fj[1]),
                                     fj_spec_to_json(row.table_fj[2])})}};
    if (row.printed_params.has_value()) {
      r["printed_params"] = params_to_json(*row.printed_params);
    }
    rows.push_back(std::move(r));
  }
  return json{{"label", cs.label},
              {"n", cs.dihedral_n},
              {"k_triple", json::array({rational_to_json(cs.k_triple[0]),
                                        rational_to_json(cs.k_triple[1]),
                                        rational_to_json(cs.k_triple[2])})},
              {"N", cs.group_order},
              {"P0", poly_to_json(cs.p0)},
              {"P1", poly_to_json(cs.p1)},
              {"Pinf", poly_to_json(cs.pinf)},
              {"rows", std::move(rows)}};
}

inline SignCase sign_case_from_name(const std::string& name) {
  if (name == "i") return SignCase::kI;
  if (name == "ii") return SignCase::kII;
  if (name == "iii") return SignCase::kIII;
  if (name == "iv") return SignCase::kIV;
  throw std::invalid_argument("bad sign case '" + name + "'");
}

inline PolyhedralCase case_from_json(const json& j) {
  PolyhedralCase cs;
  cs.label = j.at("label").get<std::string>();
  cs.dihedral_n = j.at("n").get<int>();
  for (int i = 0; i < 3; ++i) {
    cs.k_triple[static_cast<std::size_t>(i)] = rational_from_json(j.at("k_triple").at(i));
  }
  cs.group_order = j.at("N").get<long>();
  cs.p0 = poly_from_json(j.at("P0"));
  cs.p1 = poly_from_json(j.at("P1"));
  cs.pinf = poly_from_json(j.at("Pinf"));
  for (const auto& r : j.at("rows")) {
    CaseRow row{params_from_json(r.at("params")),
                sign_case_from_name(r.at("sign_case").get<std::string>()),
                r.at("swapped").get<bool>(),
                {fj_spec_from_json(r.at("table_fj").at(0)),
                 fj_spec_from_json(r.at("table_fj").at(1)),
                 fj_spec_from_json(r.at("table_fj").at(2))},
                std::nullopt};
    if (r.contains("printed_params")) {
      row.printed_params = params_from_json(r.at("printed_params"));
    }
    cs.rows.push_back(std::move(row));
  }
  return cs;
}

inline json identity_report_to_json(const IdentityReport& id, int j) {
  json out{{"j", j_name(j)},
           {"target", id.target_kind},
           {"status", identity_status_name(id.status)},
           {"detail", id.detail}};
  if (id.repair != RepairKind::kNone) out["repair"] = repair_kind_name(id.repair);
  if (id.expected_spec.has_value()) out["expected"] = fj_spec_to_json(*id.expected_spec);
  if (id.corrected_spec.has_value()) out["corrected"] = fj_spec_to_json(*id.corrected_spec);
  if (id.fitted_poly.has_value()) out["fitted"] = poly_to_json(*id.fitted_poly);
  if (!id.poly_diff.empty()) {
    json diff = json::array();
    for (const auto& [v_exp, catalog_c, fitted_c] : id.poly_diff) {
      diff.push_back(json{{"v_exp", v_exp},
                          {"catalog", rational_to_json(catalog_c)},
                          {"fitted", rational_to_json(fitted_c)}});
    }
    out["poly_diff"] = std::move(diff);
  }
  if (id.first_bad.has_value()) {
    out["first_bad"] = json{{"x_exp", rational_to_json(id.first_bad->x_exponent)},
                            {"computed", rational_to_json(id.first_bad->lhs)},
                            {"expected", rational_to_json(id.first_bad->rhs)}};
  }
  return out;
}

inline json verification_report_to_json(const VerificationReport& r,
                                        const std::string& suite = "verify") {
  json out{{"suite", suite},
           {"label", r.label},
           {"n", r.dihedral_n},
           {"row", r.row},
           {"order", r.x_order},
           {"identities", json::array({identity_report_to_json(r.identities[0], 0),
                                       identity_report_to_json(r.identities[1], 1),
                                       identity_report_to_json(r.identities[2], 2)})}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

}  // namespace schwarzmap
