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

#include "qarith/tools/designs.hpp"

#include <algorithm>
#include <array>

#include "qarith/adders.hpp"
#include "qarith/arith.hpp"
#include "qarith/errors.hpp"

namespace qarith::tools {

namespace {

constexpr std::array<std::string_view, 10> kNames = {
    "oop-proposed", "oop-draper", "ip-proposed",   "ip-draper",
    "ctrl-add",     "ctrl-add-mod", "multiplier",  "subtractor",
    "bilinear-down", "bilinear-up"};

}  // namespace

std::span<const std::string_view> design_names() { return kNames; }

bool is_design(std::string_view name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

ArithCircuit build_design(const DesignRequest& r) {
  const std::string_view d = r.design;
  if (d == "oop-proposed") return build_out_of_place(r.n, AdderMode::Proposed).arith;
  if (d == "oop-draper") return build_out_of_place(r.n, AdderMode::Draper).arith;
  if (d == "ip-proposed") return build_in_place(r.n, AdderMode::Proposed).arith;
  if (d == "ip-draper") return build_in_place(r.n, AdderMode::Draper).arith;
  if (d == "ctrl-add") return build_ctrl_add(r.n, AccumulatorWidth::Extended);
  if (d == "ctrl-add-mod") return build_ctrl_add(r.n, AccumulatorWidth::Modular);
  if (d == "multiplier") return build_multiplier(r.n);
  if (d == "subtractor") return build_subtractor(r.n);
  if (d == "bilinear-down") {
    return build_bilinear_scale_down(r.n, r.m, r.color_width);
  }
  if (d == "bilinear-up") {
    return build_bilinear_scale_up(r.n, r.m, r.color_width, r.reading);
  }
  throw DomainError("unknown design " + r.design);
}

std::optional<DesignId> formula_design(std::string_view name) {
  if (name == "oop-proposed") return DesignId::OOP_Proposed;
  if (name == "oop-draper") return DesignId::OOP_Draper;
  if (name == "ip-proposed") return DesignId::IP_Proposed;
  if (name == "ip-draper") return DesignId::IP_Draper;
  return std::nullopt;
}

}  // namespace qarith::tools
