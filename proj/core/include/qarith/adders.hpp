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
#include <string_view>
#include <utility>
#include <vector>

#include "qarith/arith_circuit.hpp"
#include "qarith/circuit.hpp"

namespace qarith {

/// Proposed: initial generates and propagate-tree pairs use the logical-AND /
/// uncompute gadgets on |A> ancillae. Draper: every site is a Toffoli and
/// ancillae start in |0>.
enum class AdderMode { Proposed, Draper };

std::string_view to_string(AdderMode mode);

enum class AdderKind { OutOfPlace, InPlace };

/// Register map of a generated adder.
///
/// Out-of-place: X has n+1 qubits (X[0] |0>, X[1..n] ancillae) and receives
/// the sum; Z holds the n - w(n) - floor(log n) propagate ancillae.
/// In-place: Z has n ancillae, Z[n-1] (0-based) carries the carry-out; X
/// holds the propagate ancillae.
struct AdderLayout {
  std::size_t n = 0;
  AdderKind kind = AdderKind::OutOfPlace;
  AdderMode mode = AdderMode::Proposed;
  std::vector<QubitId> a;
  std::vector<QubitId> b;
  std::vector<QubitId> x;
  std::vector<QubitId> z;

  /// 4n + 1 - w(n) - floor(log n) out-of-place, 4n - w(n) - floor(log n) in-place.
  static std::size_t expected_qubits(AdderKind kind, std::size_t n);
};

struct AdderCircuit {
  ArithCircuit arith;
  AdderLayout layout;

  const Circuit& circuit() const& { return arith.circuit; }
  Circuit circuit() && { return std::move(arith.circuit); }
};

/// A, B restored; X = a + b (n+1 bits); Z restored. Throws DomainError("empty adder").
AdderCircuit build_out_of_place(std::size_t n, AdderMode mode);

/// A restored; B = (a + b) mod 2^n; Z[n-1] = carry-out; other ancillae restored.
AdderCircuit build_in_place(std::size_t n, AdderMode mode);

enum class AccumulatorWidth { Extended, Modular };

/// |ctl>|a>|acc> -> |ctl>|a>|acc + ctl.a>, with an (n+1)-bit accumulator
/// (Extended) or modulo 2^n (Modular). Ancillae restored.
ArithCircuit build_ctrl_add(std::size_t n,
                            AccumulatorWidth width = AccumulatorWidth::Extended);

}  // namespace qarith
