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

#include "qarith/arith_circuit.hpp"

namespace qarith {

/// (b - a) mod 2^(n+1) into a fresh n+1 qubit register; a and b restored.
ArithCircuit build_subtractor(std::size_t n);

/// Shift-and-add product of two n-bit registers into a 2n-bit register.
ArithCircuit build_multiplier(std::size_t n);

/// Same, for operand widths wa and wb (product has wa + wb bits).
ArithCircuit build_multiplier(std::size_t wa, std::size_t wb);

}  // namespace qarith
