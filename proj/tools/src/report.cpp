// Copyright 2026 The qarith Authors
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

#include "qarith/tools/report.hpp"

#include <sstream>

#include "qarith/adders.hpp"

namespace qarith::tools {

Json report_json(const std::string& design, std::size_t n,
                 const ResourceReport& r) {
  Json j;
  j["design"] = design;
  j["n"] = n;
  j["t_count"] = r.t_count;
  j["t_depth"] = r.t_depth;
  j["cnot"] = r.cnot;
  j["h"] = r.h;
  j["s"] = r.s;
  j["t_gates"] = r.t_gates;
  j["toffoli"] = r.toffoli;
  j["land"] = r.land;
  j["lunand"] = r.lunand;
  j["qubits"] = r.qubits;
  j["formula_expected"] =
      r.formula_expected ? Json(to_string(*r.formula_expected)) : Json(nullptr);
  j["match"] = r.match ? Json(*r.match) : Json(nullptr);
  return j;
}

Json verification_json(const std::string& design, std::size_t n,
                       const std::string& engine,
                       const VerificationReport& report) {
  Json j;
  j["design"] = design;
  j["n"] = n;
  j["engine"] = engine;
  j["cases"] = report.cases;
  j["failures"] = report.failures;
  Json failed = Json::array();
  for (const CaseFailure& f : report.failed) {
    Json item;
    Json inputs;
    for (const auto& [name, value] : f.inputs) inputs[name] = value;
    item["inputs"] = inputs;
    item["reason"] = f.reason;
    failed.push_back(item);
  }
  j["failed"] = failed;
  return j;
}

namespace {

std::optional<AdderCircuit> builder_for(DesignId d, std::size_t n) {
  switch (d) {
    case DesignId::OOP_Proposed:
      return build_out_of_place(n, AdderMode::Proposed);
    case DesignId::OOP_Draper:
      return build_out_of_place(n, AdderMode::Draper);
    case DesignId::IP_Proposed:
      return build_in_place(n, AdderMode::Proposed);
    case DesignId::IP_Draper:
      return build_in_place(n, AdderMode::Draper);
    default:
      return std::nullopt;
  }
}

}  // namespace

std::vector<TableRow> comparison_table(int which,
                                       const std::vector<std::size_t>& ns) {
  std::vector<TableRow> rows;
  for (std::size_t n : ns) {
    for (DesignId d : table_designs(which)) {
      TableRow row{which, d, n, formula(d, n), std::nullopt, std::nullopt};
      if (auto built = builder_for(d, n)) {
        row.constructed = t_count(built->circuit());
        row.match = row.formula ==
                    Rational(static_cast<std::int64_t>(*row.constructed));
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "table,design,n,formula,constructed,match\n";
  for (const TableRow& r : rows) {
    os << r.table << ',' << design_label(r.design) << ',' << r.n << ','
       << to_string(r.formula) << ',';
    if (r.constructed) os << *r.constructed;
    os << ',';
    if (r.match) os << (*r.match ? "true" : "false");
    os << '\n';
  }
  return os.str();
}

Json table_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const TableRow& r : rows) {
    Json j;
    j["table"] = r.table;
    j["design"] = design_label(r.design);
    j["key"] = design_key(r.design);
    j["n"] = r.n;
    j["formula"] = to_string(r.formula);
    j["formula_text"] = formula_text(r.design);
    j["constructed"] = r.constructed ? Json(*r.constructed) : Json(nullptr);
    j["match"] = r.match ? Json(*r.match) : Json(nullptr);
    out.push_back(j);
  }
  return out;
}

}  // namespace qarith::tools
