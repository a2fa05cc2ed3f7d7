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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qarith/resources.hpp"
#include "qarith/verify.hpp"

namespace qarith::tools {

using Json = nlohmann::ordered_json;

/// {design, n, t_count, t_depth, cnot, h, s, t_gates, toffoli, land, lunand,
///  qubits, formula_expected, match}
Json report_json(const std::string& design, std::size_t n,
                 const ResourceReport& report);

Json verification_json(const std::string& design, std::size_t n,
                       const std::string& engine,
                       const VerificationReport& report);

struct TableRow {
  int table = 1;
  DesignId design;
  std::size_t n = 0;
  Rational formula;
  std::optional<std::uint64_t> constructed;
  std::optional<bool> match;
};

/// One row per design per n; constructed counts where a builder exists.
std::vector<TableRow> comparison_table(int which, const std::vector<std::size_t>& ns);

std::string table_csv(const std::vector<TableRow>& rows);

Json table_json(const std::vector<TableRow>& rows);

}  // namespace qarith::tools
