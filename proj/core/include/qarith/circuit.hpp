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

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qarith/errors.hpp"

namespace qarith {

/// Flat, zero-based position in a circuit's qubit array.
struct QubitId {
  std::size_t index = 0;

  friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

constexpr QubitId qubit(std::size_t index) { return QubitId{index}; }

/// Declared initial state of a qubit. MagicA is the ancilla state
/// (|0> + e^{i pi/4}|1>)/sqrt(2) consumed by the logical-AND gadget.
enum class InitState : std::uint8_t { Zero, One, MagicA, Input };

std::string_view to_string(InitState state);

enum class GateKind : std::uint8_t {
  X,
  CNOT,
  Toffoli,
  H,
  S,
  Sdg,
  T,
  Tdg,
  LogicalAND,
  UncomputeAND,
};

std::string_view to_string(GateKind kind);
std::size_t arity(GateKind kind);

/// Toffoli, LogicalAND and UncomputeAND. These are expanded by `lower()`.
bool is_macro(GateKind kind);
bool is_t_type(GateKind kind);

/// Gates that act as classical reversible logic on computational states.
bool is_classical(GateKind kind);

class Gate {
 public:
  /// Throws CircuitError when the operand count does not match the kind's arity.
  Gate(GateKind kind, std::span<const QubitId> operands);

  static Gate x(QubitId q) { return single(GateKind::X, q); }
  static Gate h(QubitId q) { return single(GateKind::H, q); }
  static Gate s(QubitId q) { return single(GateKind::S, q); }
  static Gate sdg(QubitId q) { return single(GateKind::Sdg, q); }
  static Gate t(QubitId q) { return single(GateKind::T, q); }
  static Gate tdg(QubitId q) { return single(GateKind::Tdg, q); }
  static Gate cnot(QubitId control, QubitId target);
  static Gate toffoli(QubitId c1, QubitId c2, QubitId target);
  static Gate logical_and(QubitId x, QubitId y, QubitId target);
  static Gate uncompute_and(QubitId x, QubitId y, QubitId target);

  GateKind kind() const { return kind_; }
  std::span<const QubitId> operands() const { return {ops_.data(), arity_}; }
  QubitId target() const { return ops_[arity_ - 1]; }
  bool has_distinct_operands() const;

  friend bool operator==(const Gate& lhs, const Gate& rhs);

 private:
  static Gate single(GateKind kind, QubitId q);

  GateKind kind_;
  std::uint8_t arity_;
  std::array<QubitId, 3> ops_{};
};

std::string to_string(const Gate& gate);

/// A named view onto circuit qubits. Registers do not own qubits.
struct Register {
  std::string name;
  std::vector<QubitId> qubits;
};

/// Records which primitive range of a lowered circuit came from a
/// LogicalAND / UncomputeAND macro.
struct MacroSpan {
  GateKind kind;
  std::array<QubitId, 3> operands;
  std::size_t begin;
  std::size_t end;
};

struct Diagnostic {
  enum class Severity : std::uint8_t { Error, Warning };

  std::optional<std::size_t> gate_index;
  std::string rule;
  std::string message;
  Severity severity = Severity::Error;
};

/// Ordered gate list over indexed qubits with named registers and declared
/// initial states. Mutable while building, immutable after `freeze()`.
class Circuit {
 public:
  /// Throws CircuitError("empty circuit") for zero qubits.
  explicit Circuit(std::size_t qubit_count);

  std::size_t qubit_count() const { return init_.size(); }
  InitState init(QubitId q) const;
  const std::vector<InitState>& init_states() const { return init_; }
  void set_init(QubitId q, InitState state);

  /// Claims `qubits` for a new register and tags them with `state`.
  void alloc_register(std::string name, std::vector<QubitId> qubits,
                      InitState state);
  const std::vector<Register>& registers() const { return registers_; }
  const Register* find_register(std::string_view name) const;
  const Register& reg(std::string_view name) const;

  void set_role(std::string name, std::string label);
  const std::map<std::string, std::string>& output_roles() const {
    return roles_;
  }

  /// Operand range is checked by `validate()`, not here, so that malformed
  /// circuits can still be inspected.
  void append(const Gate& gate);
  void append(std::span<const Gate> gates);
  const std::vector<Gate>& gates() const { return gates_; }

  void add_macro_span(MacroSpan span);
  const std::vector<MacroSpan>& macro_spans() const { return spans_; }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::vector<Diagnostic> validate() const;

 private:
  void require_mutable() const;

  std::vector<InitState> init_;
  std::vector<Register> registers_;
  std::vector<int> owner_;  // register index per qubit, -1 if unclaimed
  std::map<std::string, std::string> roles_;
  std::vector<Gate> gates_;
  std::vector<MacroSpan> spans_;
  bool frozen_ = false;
};

Circuit new_circuit(std::size_t qubit_count);

}  // namespace qarith
