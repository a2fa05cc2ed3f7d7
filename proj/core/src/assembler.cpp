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

#include "assembler.hpp"

#include <stdexcept>

#include "qarith/arith_circuit.hpp"

namespace qarith {

const View& ArithCircuit::output(std::string_view name) const {
  for (const View& v : outputs) {
    if (v.name == name) return v;
  }
  throw CircuitError("no output named '" + std::string(name) + "'");
}

const View& ArithCircuit::input(std::string_view name) const {
  for (const View& v : inputs) {
    if (v.name == name) return v;
  }
  throw CircuitError("no input named '" + std::string(name) + "'");
}

namespace detail {

QubitId Assembler::fresh(InitState state) {
  init_.push_back(state);
  return qubit(init_.size() - 1);
}

std::vector<QubitId> Assembler::fresh(std::size_t count, InitState state) {
  std::vector<QubitId> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fresh(state));
  return out;
}

void Assembler::name_register(std::string name, std::vector<QubitId> qubits) {
  registers_.emplace_back(std::move(name), std::move(qubits));
}

void Assembler::role(std::string name, std::string label) {
  roles_.emplace_back(std::move(name), std::move(label));
}

std::vector<QubitId> Assembler::acquire_ancillae(std::size_t count) {
  std::vector<QubitId> out;
  out.reserve(count);
  while (out.size() < count && !pool_free_.empty()) {
    out.push_back(pool_free_.back());
    pool_free_.pop_back();
  }
  while (out.size() < count) {
    const QubitId q = fresh(InitState::MagicA);
    pool_all_.push_back(q);
    out.push_back(q);
  }
  return out;
}

void Assembler::release_ancillae(const std::vector<QubitId>& qubits) {
  for (auto it = qubits.rbegin(); it != qubits.rend(); ++it) {
    pool_free_.push_back(*it);
  }
}

Circuit Assembler::finish(const std::string& pool_name) {
  if (!pool_all_.empty()) name_register(pool_name, pool_all_);
  Circuit c(init_.size());
  for (auto& [name, qubits] : registers_) {
    c.alloc_register(name, qubits, InitState::Zero);
  }
  for (std::size_t q = 0; q < init_.size(); ++q) c.set_init(qubit(q), init_[q]);
  for (auto& [name, label] : roles_) c.set_role(name, label);
  c.append(gates_);
  c.freeze();
  return c;
}

}  // namespace detail
}  // namespace qarith
