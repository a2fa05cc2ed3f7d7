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

#include "qarith/stdgates.hpp"

#include <algorithm>

namespace qarith {

GateSeq prepare_magic_a(QubitId q) { return {Gate::h(q), Gate::t(q)}; }

GateSeq logical_and(QubitId x, QubitId y, QubitId target) {
  return {
      Gate::cnot(x, target),  Gate::cnot(y, target), Gate::cnot(target, x),
      Gate::cnot(target, y),  Gate::tdg(x),          Gate::tdg(y),
      Gate::t(target),        Gate::cnot(target, x), Gate::cnot(target, y),
      Gate::h(target),        Gate::s(target),
  };
}

GateSeq uncompute_and(QubitId x, QubitId y, QubitId target) {
  return {
      Gate::sdg(target),      Gate::h(target),       Gate::cnot(target, x),
      Gate::cnot(target, y),  Gate::t(x),            Gate::t(y),
      Gate::tdg(target),      Gate::cnot(target, x), Gate::cnot(target, y),
      Gate::cnot(y, target),  Gate::cnot(x, target),
  };
}

GateSeq toffoli_7t(QubitId c1, QubitId c2, QubitId target) {
  return {
      Gate::h(target),      Gate::cnot(c2, target), Gate::tdg(target),
      Gate::cnot(c1, target), Gate::t(target),      Gate::cnot(c2, target),
      Gate::tdg(target),    Gate::cnot(c1, target), Gate::t(c2),
      Gate::t(target),      Gate::h(target),        Gate::cnot(c1, c2),
      Gate::t(c1),          Gate::tdg(c2),          Gate::cnot(c1, c2),
  };
}

std::size_t t_type_count(const GateSeq& seq) {
  return static_cast<std::size_t>(std::count_if(
      seq.begin(), seq.end(),
      [](const Gate& g) { return is_t_type(g.kind()); }));
}

Circuit lower(const Circuit& circuit) {
  Circuit out(circuit.qubit_count());
  for (const Register& r : circuit.registers()) {
    out.alloc_register(r.name, r.qubits, InitState::Zero);
  }
  for (std::size_t q = 0; q < circuit.qubit_count(); ++q) {
    out.set_init(qubit(q), circuit.init(qubit(q)));
  }
  for (const auto& [name, label] : circuit.output_roles()) {
    out.set_role(name, label);
  }
  for (const MacroSpan& span : circuit.macro_spans()) out.add_macro_span(span);

  for (const Gate& g : circuit.gates()) {
    const auto ops = g.operands();
    switch (g.kind()) {
      case GateKind::Toffoli:
        out.append(toffoli_7t(ops[0], ops[1], ops[2]));
        break;
      case GateKind::LogicalAND:
      case GateKind::UncomputeAND: {
        const std::size_t begin = out.gates().size();
        out.append(g.kind() == GateKind::LogicalAND
                       ? logical_and(ops[0], ops[1], ops[2])
                       : uncompute_and(ops[0], ops[1], ops[2]));
        out.add_macro_span(MacroSpan{g.kind(), {ops[0], ops[1], ops[2]}, begin,
                                     out.gates().size()});
        break;
      }
      default:
        out.append(g);
    }
  }
  if (circuit.frozen()) out.freeze();
  return out;
}

}  // namespace qarith
