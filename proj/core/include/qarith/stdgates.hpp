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
#include <vector>

#include "qarith/circuit.hpp"

namespace qarith {

/// Ordered list of primitive gates (X, CNOT, H, S, Sdg, T, Tdg).
using GateSeq = std::vector<Gate>;

/// H then T on |0>, producing (|0> + e^{i pi/4}|1>)/sqrt(2).
GateSeq prepare_magic_a(QubitId q);

/// Temporary logical-AND: |x,y>|A> -> |x,y>|x.y>, exact including phase.
/// Three T-type gates; the fourth (prep) T is charged to the gate by the
/// resource model.
GateSeq logical_and(QubitId x, QubitId y, QubitId target);

/// Measurement-free uncomputation: |x,y>|x.y> -> |x,y>|A>. The exact
/// adjoint of `logical_and`, three T-type gates.
GateSeq uncompute_and(QubitId x, QubitId y, QubitId target);

/// Standard 7-T, 6-CNOT, 2-H Toffoli network.
GateSeq toffoli_7t(QubitId c1, QubitId c2, QubitId target);

std::size_t t_type_count(const GateSeq& seq);

/// Expands Toffoli / LogicalAND / UncomputeAND into Clifford+T. Registers,
/// init tags and roles are copied unchanged; MagicA qubits stay tagged, so
/// no prep gates are emitted. AND / uncompute expansions are recorded as
/// macro spans on the result.
Circuit lower(const Circuit& circuit);

}  // namespace qarith
