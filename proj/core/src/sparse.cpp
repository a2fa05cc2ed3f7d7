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

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>

#include "qarith/errors.hpp"
#include "qarith/simulators.hpp"

namespace qarith {

namespace {

using Amplitude = SparseState::Amplitude;

Amplitude eighth_turn(double sign) {
  return std::polar(1.0, sign * std::numbers::pi / 4);
}

}  // namespace

SparseOptions SparseOptions::from_environment() {
  SparseOptions opts;
  if (const char* env = std::getenv("QARITH_SUPPORT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw SimulationError("bad QARITH_SUPPORT_CAP: " + std::string(env));
    }
    opts.support_cap = static_cast<std::size_t>(v);
  }
  return opts;
}

SparseState::SparseState(std::size_t qubits, SparseOptions options)
    : qubits_(qubits), options_(options) {
  if (qubits > kMaxSparseQubits) {
    throw SimulationError("too many qubits for sparse engine: " +
                          std::to_string(qubits));
  }
  amps_.emplace(Basis{}, Amplitude{1.0, 0.0});
}

SparseState SparseState::product(std::span<const BitValue> values,
                                 SparseOptions options) {
  SparseState s(values.size(), options);
  Basis ones;
  for (std::size_t q = 0; q < values.size(); ++q) {
    if (values[q] == BitValue::One) ones.set(q);
  }
  s.amps_.clear();
  s.amps_.emplace(ones, Amplitude{1.0, 0.0});
  for (std::size_t q = 0; q < values.size(); ++q) {
    if (values[q] == BitValue::FreshA) {
      s.hadamard(q);
      s.phase(q, eighth_turn(1.0));
    }
  }
  return s;
}

SparseState::Amplitude SparseState::amplitude(const Basis& basis) const {
  const auto it = amps_.find(basis);
  return it == amps_.end() ? Amplitude{} : it->second;
}

double SparseState::norm_squared() const {
  double total = 0.0;
  for (const auto& [basis, amp] : amps_) total += std::norm(amp);
  return total;
}

void SparseState::phase(std::size_t q, Amplitude factor) {
  for (auto& [basis, amp] : amps_) {
    if (basis.test(q)) amp *= factor;
  }
}

void SparseState::hadamard(std::size_t q) {
  const double r = 1.0 / std::numbers::sqrt2;
  Map next;
  next.reserve(amps_.size() * 2);
  for (const auto& [basis, amp] : amps_) {
    Basis zero = basis;
    zero.reset(q);
    Basis one = basis;
    one.set(q);
    next[zero] += amp * r;
    next[one] += basis.test(q) ? -amp * r : amp * r;
  }
  const double tol = options_.prune_tol;
  std::erase_if(next, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
  amps_ = std::move(next);
  check_cap();
}

void SparseState::check_cap() const {
  if (amps_.size() > options_.support_cap) {
    throw SupportCapError("state too large");
  }
}

void SparseState::apply(const Gate& gate) {
  const auto ops = gate.operands();
  for (QubitId q : ops) {
    if (q.index >= qubits_) throw SimulationError("bad qubit");
  }
  switch (gate.kind()) {
    case GateKind::X:
    case GateKind::CNOT: {
      const std::size_t t = gate.target().index;
      Map next;
      next.reserve(amps_.size());
      for (const auto& [basis, amp] : amps_) {
        Basis b = basis;
        if (gate.kind() == GateKind::X || b.test(ops[0].index)) b.flip(t);
        next.emplace(b, amp);
      }
      amps_ = std::move(next);
      return;
    }
    case GateKind::H:
      hadamard(ops[0].index);
      return;
    case GateKind::S:
      phase(ops[0].index, Amplitude{0.0, 1.0});
      return;
    case GateKind::Sdg:
      phase(ops[0].index, Amplitude{0.0, -1.0});
      return;
    case GateKind::T:
      phase(ops[0].index, eighth_turn(1.0));
      return;
    case GateKind::Tdg:
      phase(ops[0].index, eighth_turn(-1.0));
      return;
    case GateKind::Toffoli:
    case GateKind::LogicalAND:
    case GateKind::UncomputeAND:
      throw SimulationError("macro in primitive engine");
  }
}

SparseState run_sparse(const Circuit& circuit, const Values& inputs,
                       SparseOptions options) {
  const std::vector<BitValue> init = initial_values(circuit, inputs);
  SparseState state = SparseState::product(init, options);
  for (const Gate& g : circuit.gates()) state.apply(g);
  return state;
}

std::uint64_t read_register(const SparseState& state,
                            std::span<const QubitId> qubits) {
  if (qubits.size() > 64) throw SimulationError("register wider than 64 bits");
  std::optional<std::uint64_t> value;
  for (const auto& [basis, amp] : state.amplitudes()) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if (basis.test(qubits[i].index)) v |= std::uint64_t{1} << i;
    }
    if (value && *value != v) throw SimulationError("non-classical readout");
    value = v;
  }
  return value.value_or(0);
}

std::complex<double> inner_product(const SparseState& a,
                                   const SparseState& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw SimulationError("dimension mismatch");
  }
  const SparseState& small = a.support_size() <= b.support_size() ? a : b;
  const SparseState& large = &small == &a ? b : a;
  std::complex<double> total{};
  for (const auto& [basis, amp] : small.amplitudes()) {
    const auto other = large.amplitude(basis);
    total += &small == &a ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return total;
}

bool equiv_global_phase(const SparseState& a, const SparseState& b,
                        double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace qarith
