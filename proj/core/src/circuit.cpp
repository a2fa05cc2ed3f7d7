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

#include "qarith/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qarith {

std::string_view to_string(InitState state) {
  switch (state) {
    case InitState::Zero:
      return "zero";
    case InitState::One:
      return "one";
    case InitState::MagicA:
      return "magic_a";
    case InitState::Input:
      return "input";
  }
  return "?";
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "x";
    case GateKind::CNOT:
      return "cx";
    case GateKind::Toffoli:
      return "ccx";
    case GateKind::H:
      return "h";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::LogicalAND:
      return "land";
    case GateKind::UncomputeAND:
      return "lunand";
  }
  return "?";
}

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
      return 2;
    case GateKind::Toffoli:
    case GateKind::LogicalAND:
    case GateKind::UncomputeAND:
      return 3;
    default:
      return 1;
  }
}

bool is_macro(GateKind kind) {
  return kind == GateKind::Toffoli || kind == GateKind::LogicalAND ||
         kind == GateKind::UncomputeAND;
}

bool is_t_type(GateKind kind) {
  return kind == GateKind::T || kind == GateKind::Tdg;
}

bool is_classical(GateKind kind) {
  return kind == GateKind::X || kind == GateKind::CNOT ||
         kind == GateKind::Toffoli || kind == GateKind::LogicalAND ||
         kind == GateKind::UncomputeAND;
}

Gate::Gate(GateKind kind, std::span<const QubitId> operands)
    : kind_(kind), arity_(static_cast<std::uint8_t>(operands.size())) {
  if (operands.size() != arity(kind)) {
    std::ostringstream msg;
    msg << "gate " << to_string(kind) << " takes " << arity(kind)
        << " operands, got " << operands.size();
    throw CircuitError(msg.str());
  }
  std::copy(operands.begin(), operands.end(), ops_.begin());
}

Gate Gate::single(GateKind kind, QubitId q) {
  const std::array<QubitId, 1> ops{q};
  return Gate(kind, ops);
}

Gate Gate::cnot(QubitId control, QubitId target) {
  const std::array<QubitId, 2> ops{control, target};
  return Gate(GateKind::CNOT, ops);
}

Gate Gate::toffoli(QubitId c1, QubitId c2, QubitId target) {
  const std::array<QubitId, 3> ops{c1, c2, target};
  return Gate(GateKind::Toffoli, ops);
}

Gate Gate::logical_and(QubitId x, QubitId y, QubitId target) {
  const std::array<QubitId, 3> ops{x, y, target};
  return Gate(GateKind::LogicalAND, ops);
}

Gate Gate::uncompute_and(QubitId x, QubitId y, QubitId target) {
  const std::array<QubitId, 3> ops{x, y, target};
  return Gate(GateKind::UncomputeAND, ops);
}

bool Gate::has_distinct_operands() const {
  const auto ops = operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (ops[i] == ops[j]) return false;
    }
  }
  return true;
}

bool operator==(const Gate& lhs, const Gate& rhs) {
  return lhs.kind_ == rhs.kind_ && lhs.arity_ == rhs.arity_ &&
         std::equal(lhs.operands().begin(), lhs.operands().end(),
                    rhs.operands().begin());
}

std::string to_string(const Gate& gate) {
  std::ostringstream out;
  out << to_string(gate.kind()) << '(';
  bool first = true;
  for (QubitId q : gate.operands()) {
    if (!first) out << ',';
    out << q.index;
    first = false;
  }
  out << ')';
  return out.str();
}

Circuit::Circuit(std::size_t qubit_count)
    : init_(qubit_count, InitState::Zero), owner_(qubit_count, -1) {
  if (qubit_count == 0) throw CircuitError("empty circuit");
}

Circuit new_circuit(std::size_t qubit_count) { return Circuit(qubit_count); }

void Circuit::require_mutable() const {
  if (frozen_) throw CircuitError("circuit frozen");
}

InitState Circuit::init(QubitId q) const {
  if (q.index >= init_.size()) throw CircuitError("bad qubit");
  return init_[q.index];
}

void Circuit::set_init(QubitId q, InitState state) {
  require_mutable();
  if (q.index >= init_.size()) throw CircuitError("bad qubit");
  init_[q.index] = state;
}

void Circuit::alloc_register(std::string name, std::vector<QubitId> qubits,
                             InitState state) {
  require_mutable();
  if (find_register(name) != nullptr) {
    throw CircuitError("duplicate register '" + name + "'");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const QubitId q = qubits[i];
    if (q.index >= init_.size()) throw CircuitError("bad qubit");
    if (owner_[q.index] >= 0 ||
        std::find(qubits.begin(), qubits.begin() + i, q) !=
            qubits.begin() + i) {
      throw CircuitError("register overlap");
    }
  }
  const int index = static_cast<int>(registers_.size());
  for (QubitId q : qubits) {
    owner_[q.index] = index;
    init_[q.index] = state;
  }
  registers_.push_back(Register{std::move(name), std::move(qubits)});
}

const Register* Circuit::find_register(std::string_view name) const {
  for (const Register& r : registers_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const Register& Circuit::reg(std::string_view name) const {
  if (const Register* r = find_register(name)) return *r;
  throw CircuitError("no register named '" + std::string(name) + "'");
}

void Circuit::set_role(std::string name, std::string label) {
  require_mutable();
  roles_[std::move(name)] = std::move(label);
}

void Circuit::append(const Gate& gate) {
  require_mutable();
  if (!gate.has_distinct_operands()) {
    throw CircuitError("operand clash");
  }
  gates_.push_back(gate);
}

void Circuit::append(std::span<const Gate> gates) {
  for (const Gate& g : gates) append(g);
}

void Circuit::add_macro_span(MacroSpan span) {
  require_mutable();
  spans_.push_back(span);
}

std::vector<Diagnostic> Circuit::validate() const {
  std::vector<Diagnostic> out;
  const std::size_t n = qubit_count();
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    bool in_range = true;
    for (QubitId q : g.operands()) {
      if (q.index >= n) {
        std::ostringstream msg;
        msg << "operand q[" << q.index << "] out of range (" << n
            << " qubits)";
        out.push_back({i, "bad qubit", msg.str()});
        in_range = false;
      }
    }
    if (!g.has_distinct_operands()) {
      out.push_back({i, "operand clash", to_string(g)});
    }
    if (in_range && g.kind() == GateKind::LogicalAND &&
        init_[g.target().index] != InitState::MagicA) {
      out.push_back({i, "and target", "AND target should be MagicA",
                     Diagnostic::Severity::Warning});
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (owner_[q] < 0) {
      out.push_back({std::nullopt, "uncovered qubit",
                     "q[" + std::to_string(q) + "] is in no register"});
    }
  }
  return out;
}

}  // namespace qarith
