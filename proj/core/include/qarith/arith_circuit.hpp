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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qarith/circuit.hpp"

namespace qarith {

/// Integer values keyed by register / view name. LSB is the first qubit.
using Values = std::map<std::string, std::uint64_t, std::less<>>;

/// A named, ordered slice of qubits used to read or write an integer.
struct View {
  std::string name;
  std::vector<QubitId> qubits;
};

/// A circuit together with its functional contract on computational inputs.
///
/// Every qubit that is neither in an output view nor in a garbage view must
/// end in its initial state: inputs unchanged, Zero/One unchanged, MagicA
/// restored to |A>.
struct ArithCircuit {
  std::string design;
  Circuit circuit;
  /// Input-tagged registers, keyed by register name.
  std::vector<View> inputs;
  std::vector<View> outputs;
  std::vector<View> garbage;
  /// Expected output values for the given input values.
  std::function<Values(const Values&)> expected;

  const View& output(std::string_view name) const;
  const View& input(std::string_view name) const;
};

}  // namespace qarith
