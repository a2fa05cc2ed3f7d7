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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qarith/circuit.hpp"

namespace qarith::detail {

enum class AdderStyle { Proposed, Draper };

/// Collects qubits, registers and gates for a builder whose total width is
/// not known up front, then produces a frozen Circuit.
class Assembler {
 public:
  QubitId fresh(InitState state);
  std::vector<QubitId> fresh(std::size_t count, InitState state);

  void name_register(std::string name, std::vector<QubitId> qubits);
  void role(std::string name, std::string label);

  void emit(const Gate& gate) { gates_.push_back(gate); }
  std::size_t qubit_count() const { return init_.size(); }

  /// MagicA ancillae handed out and returned in LIFO order. All users
  /// restore them to |A> before release.
  std::vector<QubitId> acquire_ancillae(std::size_t count);
  void release_ancillae(const std::vector<QubitId>& qubits);

  /// Pool qubits are collected into a register named `pool_name`.
  Circuit finish(const std::string& pool_name = "ANC");

 private:
  std::vector<InitState> init_;
  std::vector<std::pair<std::string, std::vector<QubitId>>> registers_;
  std::vector<std::pair<std::string, std::string>> roles_;
  std::vector<Gate> gates_;
  std::vector<QubitId> pool_all_;
  std::vector<QubitId> pool_free_;
};

/// Gate emission that honours the proposed / Draper substitution rule.
class Emitter {
 public:
  Emitter(Assembler& as, AdderStyle style) : as_(as), style_(style) {}

  AdderStyle style() const { return style_; }
  InitState ancilla_state() const {
    return style_ == AdderStyle::Proposed ? InitState::MagicA
                                          : InitState::Zero;
  }

  void x(QubitId q) { as_.emit(Gate::x(q)); }
  void cnot(QubitId c, QubitId t) { as_.emit(Gate::cnot(c, t)); }
  void toffoli(QubitId c1, QubitId c2, QubitId t) {
    as_.emit(Gate::toffoli(c1, c2, t));
  }
  /// Target must be a fresh ancilla (|A> proposed, |0> Draper).
  void compute_and(QubitId x, QubitId y, QubitId t) {
    as_.emit(style_ == AdderStyle::Proposed ? Gate::logical_and(x, y, t)
                                            : Gate::toffoli(x, y, t));
  }
  /// Target must hold exactly x.y; returned to a fresh ancilla.
  void uncompute_and(QubitId x, QubitId y, QubitId t) {
    as_.emit(style_ == AdderStyle::Proposed ? Gate::uncompute_and(x, y, t)
                                            : Gate::toffoli(x, y, t));
  }

  Assembler& assembler() { return as_; }

 private:
  Assembler& as_;
  AdderStyle style_;
};

}  // namespace qarith::detail
