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

#include <string>
#include <string_view>

#include "qarith/circuit.hpp"

namespace qarith::tools {

enum class EmitLevel { Macro, CliffordT };

std::string_view to_string(EmitLevel level);

/// OpenQASM 2.0 text. Registers, init tags and roles travel as comments; at
/// macro level logical-AND / uncompute gates are delimited gate groups.
std::string emit_qasm(const Circuit& circuit, EmitLevel level);

/// Inverse of `emit_qasm`. Throws ParseError.
Circuit parse_qasm(std::string_view text);

}  // namespace qarith::tools
