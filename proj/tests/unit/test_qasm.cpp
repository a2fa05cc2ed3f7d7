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

#include <fstream>
#include <sstream>

#include "qarith/adders.hpp"
#include "qarith/arith.hpp"
#include "qarith/errors.hpp"
#include "qarith/resources.hpp"
#include "qarith/stdgates.hpp"
#include "qarith/tools/qasm.hpp"

namespace qarith::tools {
namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(QARITH_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_same(const Circuit& a, const Circuit& b) {
  EXPECT_EQ(a.qubit_count(), b.qubit_count());
  EXPECT_EQ(a.init_states(), b.init_states());
  EXPECT_EQ(a.gates(), b.gates());
  ASSERT_EQ(a.registers().size(), b.registers().size());
  for (std::size_t i = 0; i < a.registers().size(); ++i) {
    EXPECT_EQ(a.registers()[i].name, b.registers()[i].name);
    EXPECT_EQ(a.registers()[i].qubits, b.registers()[i].qubits);
  }
  EXPECT_EQ(a.output_roles(), b.output_roles());
}

TEST(Qasm, HeaderIsExact) {
  const std::string text =
      emit_qasm(build_out_of_place(4, AdderMode::Proposed).circuit(), EmitLevel::Macro);
  EXPECT_EQ(text.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[14];\n", 0), 0u);
}

TEST(Qasm, MacroRoundTrip) {
  std::vector<Circuit> circuits;
  for (std::size_t n = 1; n <= 9; ++n) {
    circuits.push_back(build_out_of_place(n, AdderMode::Proposed).circuit());
    circuits.push_back(build_in_place(n, AdderMode::Proposed).circuit());
    circuits.push_back(build_in_place(n, AdderMode::Draper).circuit());
  }
  circuits.push_back(build_multiplier(3).circuit);
  for (const Circuit& c : circuits) {
    const Circuit back = parse_qasm(emit_qasm(c, EmitLevel::Macro));
    expect_same(c, back);
    EXPECT_EQ(emit_qasm(back, EmitLevel::Macro), emit_qasm(c, EmitLevel::Macro));
  }
}

TEST(Qasm, CliffordTLevelIsPrimitiveAndKeepsAccounting) {
  const Circuit& c = build_in_place(4, AdderMode::Proposed).circuit();
  const std::string text = emit_qasm(c, EmitLevel::CliffordT);
  EXPECT_EQ(text.find("ccx"), std::string::npos);
  EXPECT_EQ(text.find("// begin"), std::string::npos);
  const Circuit back = parse_qasm(text);
  for (const Gate& g : back.gates()) EXPECT_FALSE(is_macro(g.kind()));
  EXPECT_EQ(t_count(back), t_count(c));
}

TEST(Qasm, FixtureParses) {
  const Circuit c = parse_qasm(fixture("oop2.qasm"));
  expect_same(c, build_out_of_place(2, AdderMode::Proposed).circuit());
}

TEST(Qasm, TamperedGadgetIsRejected) {
  try {
    parse_qasm(fixture("oop2_bad_gadget.qasm"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("land group"), std::string::npos);
  }
}

TEST(Qasm, Errors) {
  EXPECT_THROW(parse_qasm("OPENQASM 3.0;\n"), ParseError);
  const std::string head = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n";
  EXPECT_THROW(parse_qasm(head + "foo q[0];\n"), ParseError);
  EXPECT_THROW(parse_qasm(head + "cx q[0],q[7];\n"), ParseError);
  EXPECT_THROW(parse_qasm(head + "cx q[1],q[1];\n"), ParseError);
  EXPECT_THROW(parse_qasm(head + "// begin land(0,1,2)\nx q[0];\n"), ParseError);
  EXPECT_THROW(parse_qasm(head + "// end land\n"), ParseError);
  const Circuit ok = parse_qasm(head + "ccx q[0],q[1],q[2];\nh q[2];\n");
  EXPECT_EQ(ok.gates().size(), 2u);
}

}  // namespace
}  // namespace qarith::tools
