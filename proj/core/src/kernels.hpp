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
#include <optional>
#include <span>

#include "assembler.hpp"
#include "qarith/circuit.hpp"

namespace qarith::detail {

/// x[0] must be |0>; x[1..n] and `propagate` must be fresh ancillae for the
/// emitter's style. Leaves a, b unchanged and x = a + b.
void emit_out_of_place(Emitter& e, std::span<const QubitId> a,
                       std::span<const QubitId> b, std::span<const QubitId> x,
                       std::span<const QubitId> propagate);

/// b <- a + b on n bits. `carries` holds n-1 fresh ancillae for c_1..c_{n-1}.
/// With `carry_out`, c_n is XORed into it; when `carry_out_fresh` the qubit
/// is a fresh ancilla and its first write uses the AND gadget. Without it the
/// addition is modulo 2^n.
void emit_in_place(Emitter& e, std::span<const QubitId> a,
                   std::span<const QubitId> b, std::span<const QubitId> carries,
                   std::optional<QubitId> carry_out, bool carry_out_fresh,
                   std::span<const QubitId> propagate);

/// Propagate ancillae needed by `emit_in_place`.
std::size_t in_place_propagate_ancillae(std::size_t n, bool with_carry_out);

/// Ctrl-Add onto `acc` (n or n+1 qubits) using pool ancillae.
void emit_ctrl_add(Emitter& e, QubitId ctl, std::span<const QubitId> a,
                   std::span<const QubitId> acc);

/// p ^= a * b; p must be zero with at least |a| + |b| qubits.
void emit_multiplier(Emitter& e, std::span<const QubitId> a,
                     std::span<const QubitId> b, std::span<const QubitId> p);

}  // namespace qarith::detail
