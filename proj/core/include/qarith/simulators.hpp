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

#include <bitset>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "qarith/arith_circuit.hpp"
#include "qarith/circuit.hpp"

namespace qarith {

/// Per-qubit value in the boolean engine; also used to describe product
/// states for the sparse engine.
enum class BitValue : std::uint8_t { Zero, One, FreshA };

/// Initial per-qubit values from init tags and register inputs.
/// Throws SimulationError on a missing or out-of-range input.
std::vector<BitValue> initial_values(const Circuit& circuit,
                                     const Values& inputs);

inline constexpr std::size_t kMaxSparseQubits = 512;

struct SparseOptions {
  double prune_tol = 1e-12;
  std::size_t support_cap = std::size_t{1} << 22;

  /// Defaults, with the cap overridden by QARITH_SUPPORT_CAP when set.
  static SparseOptions from_environment();
};

class SparseState {
 public:
  using Basis = std::bitset<kMaxSparseQubits>;
  using Amplitude = std::complex<double>;
  using Map = std::unordered_map<Basis, Amplitude>;

  /// |0...0> on `qubits` qubits.
  explicit SparseState(std::size_t qubits, SparseOptions options = {});

  static SparseState product(std::span<const BitValue> values,
                             SparseOptions options = {});

  std::size_t qubit_count() const { return qubits_; }
  std::size_t support_size() const { return amps_.size(); }
  const Map& amplitudes() const { return amps_; }
  Amplitude amplitude(const Basis& basis) const;
  double norm_squared() const;
  const SparseOptions& options() const { return options_; }

  /// Primitive gates only; macros throw SimulationError.
  void apply(const Gate& gate);

 private:
  void phase(std::size_t q, Amplitude factor);
  void hadamard(std::size_t q);
  void check_cap() const;

  std::size_t qubits_;
  SparseOptions options_;
  Map amps_;
};

/// Runs a lowered circuit. Throws "macro in primitive engine" on macros and
/// SupportCapError("state too large") past the support cap.
SparseState run_sparse(const Circuit& circuit, const Values& inputs,
                       SparseOptions options = {});

/// LSB is the first qubit. Throws "non-classical readout" if the support
/// disagrees on any listed qubit.
std::uint64_t read_register(const SparseState& state,
                            std::span<const QubitId> qubits);

/// |<a|b>| >= 1 - tol. Throws on qubit count mismatch.
bool equiv_global_phase(const SparseState& a, const SparseState& b,
                        double tol);

std::complex<double> inner_product(const SparseState& a, const SparseState& b);

struct BooleanState {
  std::vector<BitValue> bits;
};

/// Macro-level classical run over {X, CNOT, Toffoli, LogicalAND,
/// UncomputeAND}.
BooleanState run_boolean(const Circuit& circuit, const Values& inputs);

BooleanState run_boolean(const Circuit& circuit, std::vector<BitValue> bits);

std::uint64_t read_register(const BooleanState& state,
                            std::span<const QubitId> qubits);

}  // namespace qarith
