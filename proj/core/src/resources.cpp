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

#include "qarith/resources.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "qarith/errors.hpp"
#include "qarith/schedule.hpp"
#include "qarith/stdgates.hpp"

namespace qarith {

namespace {

struct Row {
  DesignId id;
  AdderClass cls;
  std::string_view label;
  std::string_view key;
  std::string_view text;
  int degree;
  Rational leading;
};

constexpr std::int64_t kMaxFormulaN = 1'000'000;

const std::array<Row, 8>& rows() {
  static const std::array<Row, 8> r = {{
      {DesignId::OOP_Proposed, AdderClass::OutOfPlace, "Proposed",
       "oop-proposed", "25n - 14w(n) - 14floor(log n) - 7", 1, Rational(25)},
      {DesignId::OOP_Draper, AdderClass::OutOfPlace, "Draper", "oop-draper",
       "35n - 21w(n) - 21floor(log n) - 7", 1, Rational(35)},
      {DesignId::OOP_Thapliyal, AdderClass::OutOfPlace, "Thapliyal",
       "oop-thapliyal", "35n - 14", 1, Rational(35)},
      {DesignId::OOP_Babu, AdderClass::OutOfPlace, "Babu", "oop-babu", "54n",
       1, Rational(54)},
      {DesignId::IP_Proposed, AdderClass::InPlace, "Proposed", "ip-proposed",
       "46n - 14w(n) - 14floor(log n) - 14w(n-1) - 14floor(log(n-1)) - 36", 1,
       Rational(46)},
      {DesignId::IP_Draper, AdderClass::InPlace, "Draper", "ip-draper",
       "70n - 21w(n) - 21floor(log n) - 21w(n-1) - 21floor(log(n-1)) - 49", 1,
       Rational(70)},
      {DesignId::IP_Thapliyal, AdderClass::InPlace, "Thapliyal",
       "ip-thapliyal", "203n/4 - 28", 1, Rational(203, 4)},
      {DesignId::IP_Cheng, AdderClass::InPlace, "Cheng", "ip-cheng",
       "(14/6)n^3 + (21/6)n^2 - (49/6)n", 3, Rational(14, 6)},
  }};
  return r;
}

const Row& row(DesignId id) {
  for (const Row& r : rows()) {
    if (r.id == id) return r;
  }
  throw DomainError("unknown design");
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

AdderClass adder_class(DesignId design) { return row(design).cls; }
std::string_view design_label(DesignId design) { return row(design).label; }
std::string_view design_key(DesignId design) { return row(design).key; }
std::string_view formula_text(DesignId design) { return row(design).text; }

std::span<const DesignId> table_designs(int which) {
  static constexpr std::array<DesignId, 4> kTable1 = {
      DesignId::OOP_Draper, DesignId::OOP_Thapliyal, DesignId::OOP_Babu,
      DesignId::OOP_Proposed};
  static constexpr std::array<DesignId, 4> kTable2 = {
      DesignId::IP_Draper, DesignId::IP_Thapliyal, DesignId::IP_Cheng,
      DesignId::IP_Proposed};
  if (which == 1) return kTable1;
  if (which == 2) return kTable2;
  throw DomainError("no such table");
}

Rational formula(DesignId design, std::uint64_t n_in) {
  const std::uint64_t min_n =
      adder_class(design) == AdderClass::InPlace ? 2 : 1;
  if (n_in < min_n || n_in > static_cast<std::uint64_t>(kMaxFormulaN)) {
    throw DomainError("formula domain");
  }
  const auto n = static_cast<std::int64_t>(n_in);
  const auto w = static_cast<std::int64_t>(weight(n_in));
  const auto l = static_cast<std::int64_t>(floor_log2(n_in));
  const auto w1 = static_cast<std::int64_t>(weight(n_in - 1));
  const auto l1 = static_cast<std::int64_t>(floor_log2(n_in - 1));
  switch (design) {
    case DesignId::OOP_Proposed:
      return Rational(25 * n - 14 * w - 14 * l - 7);
    case DesignId::OOP_Draper:
      return Rational(35 * n - 21 * w - 21 * l - 7);
    case DesignId::OOP_Thapliyal:
      return Rational(35 * n - 14);
    case DesignId::OOP_Babu:
      return Rational(54 * n);
    case DesignId::IP_Proposed:
      return Rational(46 * n - 14 * w - 14 * l - 14 * w1 - 14 * l1 - 36);
    case DesignId::IP_Draper:
      return Rational(70 * n - 21 * w - 21 * l - 21 * w1 - 21 * l1 - 49);
    case DesignId::IP_Thapliyal:
      return Rational(203 * n, 4) - 28;
    case DesignId::IP_Cheng:
      return Rational(14, 6) * n * n * n + Rational(21, 6) * n * n -
             Rational(49, 6) * n;
  }
  throw DomainError("unknown design");
}

namespace {

void require_same_class(DesignId a, DesignId b) {
  if (adder_class(a) != adder_class(b)) {
    throw DomainError("designs are not comparable");
  }
}

double percent(const Rational& ratio) {
  return 100.0 * (1.0 - boost::rational_cast<double>(ratio));
}

}  // namespace

double savings(DesignId a, DesignId b, std::uint64_t n) {
  require_same_class(a, b);
  const Rational fb = formula(b, n);
  if (fb.numerator() == 0) throw DomainError("zero baseline");
  return percent(formula(a, n) / fb);
}

double asymptotic_savings(DesignId a, DesignId b) {
  require_same_class(a, b);
  const Row& ra = row(a);
  const Row& rb = row(b);
  if (ra.degree < rb.degree) return 100.0;
  if (ra.degree > rb.degree) throw DomainError("savings unbounded");
  return percent(ra.leading / rb.leading);
}

std::uint64_t t_count(const Circuit& circuit) {
  std::uint64_t total = 0;
  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::Toffoli:
        total += 7;
        break;
      case GateKind::LogicalAND:
        total += 4;
        break;
      case GateKind::UncomputeAND:
        total += 3;
        break;
      default:
        if (is_t_type(g.kind())) ++total;
    }
  }
  for (const MacroSpan& span : circuit.macro_spans()) {
    if (span.kind == GateKind::LogicalAND) ++total;
  }
  return total;
}

std::uint64_t t_depth(const Circuit& circuit) {
  const bool has_macros =
      std::any_of(circuit.gates().begin(), circuit.gates().end(),
                  [](const Gate& g) { return is_macro(g.kind()); });
  const Circuit lowered = has_macros ? lower(circuit) : circuit;
  std::vector<std::uint64_t> level(lowered.qubit_count(), 0);
  std::set<std::uint64_t> t_layers;
  for (const Gate& g : lowered.gates()) {
    std::uint64_t layer = 0;
    for (QubitId q : g.operands()) layer = std::max(layer, level.at(q.index));
    ++layer;
    for (QubitId q : g.operands()) level[q.index] = layer;
    if (is_t_type(g.kind())) t_layers.insert(layer);
  }
  return t_layers.size();
}

ResourceReport count(const Circuit& circuit) {
  ResourceReport r;
  r.qubits = circuit.qubit_count();
  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::X:
        ++r.x;
        break;
      case GateKind::CNOT:
        ++r.cnot;
        break;
      case GateKind::H:
        ++r.h;
        break;
      case GateKind::S:
      case GateKind::Sdg:
        ++r.s;
        break;
      case GateKind::T:
      case GateKind::Tdg:
        ++r.t_gates;
        break;
      case GateKind::Toffoli:
        ++r.toffoli;
        break;
      case GateKind::LogicalAND:
        ++r.land;
        break;
      case GateKind::UncomputeAND:
        ++r.lunand;
        break;
    }
  }
  r.t_count = t_count(circuit);
  r.t_depth = t_depth(circuit);
  return r;
}

ResourceReport count(const Circuit& circuit, DesignId design, std::uint64_t n) {
  ResourceReport r = count(circuit);
  r.formula_expected = formula(design, n);
  r.match = *r.formula_expected == Rational(static_cast<std::int64_t>(r.t_count));
  return r;
}

}  // namespace qarith
