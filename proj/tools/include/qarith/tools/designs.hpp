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
#include <string>
#include <string_view>

#include "qarith/arith_circuit.hpp"
#include "qarith/bilinear.hpp"
#include "qarith/resources.hpp"

namespace qarith::tools {

struct DesignRequest {
  std::string design;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t color_width = 8;
  CoordinateReading reading = CoordinateReading::Slice;
};

std::span<const std::string_view> design_names();

bool is_design(std::string_view name);

/// Throws DomainError for unknown designs or out-of-domain widths.
ArithCircuit build_design(const DesignRequest& request);

/// Closed-form row for designs that have one.
std::optional<DesignId> formula_design(std::string_view name);

}  // namespace qarith::tools
