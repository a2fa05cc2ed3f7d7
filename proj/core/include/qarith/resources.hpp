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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "qarith/circuit.hpp"

namespace qarith {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);

enum class DesignId {
  OOP_Proposed,
  OOP_Draper,
  OOP_Thapliyal,
  OOP_Babu,
  IP_Proposed,
  IP_Draper,
  IP_Thapliyal,
  IP_Cheng,
};

enum class AdderClass { OutOfPlace, InPlace };

AdderClass adder_class(DesignId design);

/// Row label, e.g. "Draper".
std::string_view design_label(DesignId design);

/// Stable identifier, e.g. "ip-cheng".
std::string_view design_key(DesignId design);

std::string_view formula_text(DesignId design);

/// Rows of the out-of-place (1) or in-place (2) comparison table.
std::span<const DesignId> table_designs(int which);

/// Exact T-count formula. Throws DomainError("formula domain") for n < 1
/// (n < 2 for in-place rows).
Rational formula(DesignId design, std::uint64_t n);

/// 100 (1 - formula(a, n) / formula(b, n)). Throws on class mismatch.
double savings(DesignId a, DesignId b, std::uint64_t n);

/// Savings from the leading terms; 100 when `a` has the lower degree.
double asymptotic_savings(DesignId a, DesignId b);

struct ResourceReport {
  std::uint64_t t_count = 0;
  std::uint64_t t_depth = 0;
  std::uint64_t qubits = 0;
  std::uint64_t x = 0;
  std::uint64_t cnot = 0;
  std::uint64_t h = 0;
  std::uint64_t s = 0;        ///< S and S-dagger
  std::uint64_t t_gates = 0;  ///< T and T-dagger primitives
  std::uint64_t toffoli = 0;
  std::uint64_t land = 0;
  std::uint64_t lunand = 0;
  std::optional<Rational> formula_expected;
  std::optional<bool> match;
};

/// 7 per Toffoli, 4 per logical-AND, 3 per uncompute, 1 per T-type
/// primitive, plus 1 per lowered logical-AND span.
std::uint64_t t_count(const Circuit& circuit);

/// Number of as-soon-as-possible layers of the lowered circuit that hold a
/// T-type gate.
std::uint64_t t_depth(const Circuit& circuit);

ResourceReport count(const Circuit& circuit);

ResourceReport count(const Circuit& circuit, DesignId design, std::uint64_t n);

}  // namespace qarith
