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

#include <algorithm>
#include <string>

#include "qarith/errors.hpp"
#include "qarith/simulators.hpp"

namespace qarith {

namespace {

std::string at(std::size_t index) {
  return " at gate index " + std::to_string(index);
}

bool classical(BitValue v) { return v != BitValue::FreshA; }

BitValue from_bool(bool b) { return b ? BitValue::One : BitValue::Zero; }

}  // namespace

std::vector<BitValue> initial_values(const Circuit& circuit,
                                     const Values& inputs) {
  std::vector<BitValue> bits(circuit.qubit_count(), BitValue::Zero);
  for (std::size_t q = 0; q < bits.size(); ++q) {
    switch (circuit.init(qubit(q))) {
      case InitState::Zero:
      case InitState::Input:
        bits[q] = BitValue::Zero;
        break;
      case InitState::One:
        bits[q] = BitValue::One;
        break;
      case InitState::MagicA:
        bits[q] = BitValue::FreshA;
        break;
    }
  }
  for (const Register& r : circuit.registers()) {
    const bool is_input =
        !r.qubits.empty() && std::all_of(r.qubits.begin(), r.qubits.end(),
                                         [&](QubitId q) {
                                           return circuit.init(q) ==
                                                  InitState::Input;
                                         });
    if (!is_input) continue;
    const auto it = inputs.find(r.name);
    if (it == inputs.end()) throw SimulationError("missing input " + r.name);
    const std::uint64_t v = it->second;
    if (r.qubits.size() < 64 && (v >> r.qubits.size()) != 0) {
      throw SimulationError("input out of range for " + r.name);
    }
    for (std::size_t i = 0; i < r.qubits.size(); ++i) {
      const bool bit = i < 64 && ((v >> i) & 1) != 0;
      bits[r.qubits[i].index] = from_bool(bit);
    }
  }
  for (const auto& [name, value] : inputs) {
    if (circuit.find_register(name) == nullptr) {
      throw SimulationError("unknown input register " + name);
    }
  }
  return bits;
}

BooleanState run_boolean(const Circuit& circuit, const Values& inputs) {
  return run_boolean(circuit, initial_values(circuit, inputs));
}

BooleanState run_boolean(const Circuit& circuit, std::vector<BitValue> bits) {
  if (bits.size() != circuit.qubit_count()) {
    throw SimulationError("dimension mismatch");
  }
  const auto& gates = circuit.gates();
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const Gate& g = gates[k];
    const auto ops = g.operands();
    for (QubitId q : ops) {
      if (q.index >= bits.size()) throw SimulationError("bad qubit" + at(k));
    }
    auto value = [&](std::size_t i) -> bool {
      const BitValue v = bits[ops[i].index];
      if (!classical(v)) {
        throw SimulationError("non-classical operand" + at(k));
      }
      return v == BitValue::One;
    };
    BitValue& target = bits[g.target().index];
    switch (g.kind()) {
      case GateKind::X:
        target = from_bool(!value(0));
        break;
      case GateKind::CNOT:
        target = from_bool(value(1) != value(0));
        break;
      case GateKind::Toffoli:
        target = from_bool(value(2) != (value(0) && value(1)));
        break;
      case GateKind::LogicalAND:
        if (target != BitValue::FreshA) {
          throw SimulationError("dirty AND target" + at(k));
        }
        target = from_bool(value(0) && value(1));
        break;
      case GateKind::UncomputeAND:
        if (!classical(target) ||
            (target == BitValue::One) != (value(0) && value(1))) {
          throw SimulationError("uncompute mismatch" + at(k));
        }
        target = BitValue::FreshA;
        break;
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg:
        throw SimulationError("non-boolean gate" + at(k));
    }
  }
  return BooleanState{std::move(bits)};
}

std::uint64_t read_register(const BooleanState& state,
                            std::span<const QubitId> qubits) {
  if (qubits.size() > 64) throw SimulationError("register wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const BitValue b = state.bits.at(qubits[i].index);
    if (!classical(b)) throw SimulationError("non-classical readout");
    if (b == BitValue::One) v |= std::uint64_t{1} << i;
  }
  return v;
}

}  // namespace qarith
