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

#include <gtest/gtest.h>

#include <algorithm>

#include "qarith/adders.hpp"
#include "qarith/circuit.hpp"

namespace qarith {
namespace {

bool has_rule(const std::vector<Diagnostic>& d, const std::string& rule) {
  return std::any_of(d.begin(), d.end(),
                     [&](const Diagnostic& x) { return x.rule == rule; });
}

TEST(Circuit, NewCircuitStartsEmptyAndZero) {
  Circuit c = new_circuit(3);
  EXPECT_EQ(c.qubit_count(), 3u);
  EXPECT_TRUE(c.gates().empty());
  EXPECT_TRUE(c.registers().empty());
  for (InitState s : c.init_states()) EXPECT_EQ(s, InitState::Zero);
  EXPECT_EQ(new_circuit(14).qubit_count(), 14u);
}

TEST(Circuit, ZeroQubitsIsAnError) {
  EXPECT_THROW(
      {
        try {
          new_circuit(0);
        } catch (const CircuitError& e) {
          EXPECT_STREQ(e.what(), "empty circuit");
          throw;
        }
      },
      CircuitError);
}

TEST(Circuit, AllocRegister) {
  Circuit c(14);
  c.alloc_register("A", {qubit(0), qubit(1), qubit(2), qubit(3)},
                   InitState::Input);
  EXPECT_EQ(c.reg("A").qubits.size(), 4u);
  EXPECT_EQ(c.init(qubit(2)), InitState::Input);
  c.alloc_register("Z", {qubit(10)}, InitState::MagicA);
  EXPECT_EQ(c.init(qubit(10)), InitState::MagicA);

  try {
    c.alloc_register("B", {qubit(3), qubit(4)}, InitState::Input);
    FAIL();
  } catch (const CircuitError& e) {
    EXPECT_STREQ(e.what(), "register overlap");
  }
  try {
    c.alloc_register("C", {qubit(14)}, InitState::Input);
    FAIL();
  } catch (const CircuitError& e) {
    EXPECT_STREQ(e.what(), "bad qubit");
  }
  EXPECT_EQ(c.find_register("B"), nullptr);
}

TEST(Circuit, AppendKeepsOrderAndRejectsClash) {
  Circuit c(5);
  c.append(Gate::cnot(qubit(0), qubit(1)));
  c.append(Gate::x(qubit(2)));
  ASSERT_EQ(c.gates().size(), 2u);
  EXPECT_EQ(c.gates()[0], Gate::cnot(qubit(0), qubit(1)));
  try {
    c.append(Gate::toffoli(qubit(2), qubit(2), qubit(3)));
    FAIL();
  } catch (const CircuitError& e) {
    EXPECT_STREQ(e.what(), "operand clash");
  }
  c.set_init(qubit(4), InitState::MagicA);
  c.append(Gate::logical_and(qubit(0), qubit(1), qubit(4)));
  EXPECT_EQ(c.gates().size(), 3u);
}

TEST(Circuit, FrozenCircuitRejectsAppend) {
  Circuit c(2);
  c.freeze();
  EXPECT_THROW(c.append(Gate::x(qubit(0))), CircuitError);
}

TEST(Circuit, GateArity) {
  const QubitId two[2] = {qubit(0), qubit(1)};
  EXPECT_THROW(Gate(GateKind::Toffoli, two), CircuitError);
  EXPECT_EQ(arity(GateKind::LogicalAND), 3u);
  EXPECT_EQ(arity(GateKind::Sdg), 1u);
  EXPECT_EQ(to_string(Gate::toffoli(qubit(0), qubit(1), qubit(2))),
            "ccx(0,1,2)");
}

TEST(Circuit, ValidateFlagsOutOfRangeOperand) {
  Circuit c(14);
  c.alloc_register("ALL", [] {
    std::vector<QubitId> q;
    for (std::size_t i = 0; i < 14; ++i) q.push_back(qubit(i));
    return q;
  }(), InitState::Zero);
  c.append(Gate::cnot(qubit(0), qubit(1)));
  c.append(Gate::toffoli(qubit(0), qubit(1), qubit(99)));
  const auto d = c.validate();
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].gate_index, 1u);
  EXPECT_EQ(d[0].rule, "bad qubit");
}

TEST(Circuit, ValidateWarnsOnInputAndTarget) {
  Circuit c(3);
  c.alloc_register("Q", {qubit(0), qubit(1), qubit(2)}, InitState::Input);
  c.append(Gate::logical_and(qubit(0), qubit(1), qubit(2)));
  const auto d = c.validate();
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].severity, Diagnostic::Severity::Warning);
  EXPECT_EQ(d[0].message, "AND target should be MagicA");
}

TEST(Circuit, ValidateFlagsUncoveredQubits) {
  Circuit c(2);
  c.alloc_register("A", {qubit(0)}, InitState::Input);
  EXPECT_TRUE(has_rule(c.validate(), "uncovered qubit"));
}

TEST(Circuit, GeneratedAddersValidateClean) {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (AdderMode mode : {AdderMode::Proposed, AdderMode::Draper}) {
      EXPECT_TRUE(build_out_of_place(n, mode).circuit().validate().empty()) << n;
      EXPECT_TRUE(build_in_place(n, mode).circuit().validate().empty()) << n;
    }
    EXPECT_TRUE(build_ctrl_add(n).circuit.validate().empty()) << n;
  }
}

}  // namespace
}  // namespace qarith
