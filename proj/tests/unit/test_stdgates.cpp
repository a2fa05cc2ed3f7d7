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

#include <random>

#include "oracles.hpp"
#include "qarith/simulators.hpp"
#include "qarith/stdgates.hpp"

namespace qarith {
namespace {

using testing::Dense;
using C = Dense::C;

constexpr double kTol = 1e-10;

const QubitId kX = qubit(0);
const QubitId kY = qubit(1);
const QubitId kT = qubit(2);

/// |x,y> (x on qubit 0) tensor |A> on qubit 2.
Dense controls_with_a(const std::array<C, 4>& controls) {
  Dense d(3);
  d[0] = 0;
  const C a1 = std::polar(1.0, std::numbers::pi / 4);
  for (std::size_t xy = 0; xy < 4; ++xy) {
    d[xy] = controls[xy] / std::sqrt(2.0);
    d[xy | 4] = controls[xy] * a1 / std::sqrt(2.0);
  }
  return d;
}

Dense controls_with_and(const std::array<C, 4>& controls) {
  Dense d(3);
  d[0] = 0;
  for (std::size_t xy = 0; xy < 4; ++xy) {
    d[xy | (xy == 3 ? 4 : 0)] = controls[xy];
  }
  return d;
}

std::array<C, 4> random_controls(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::array<C, 4> c;
  double norm = 0;
  for (C& v : c) {
    v = C(g(rng), g(rng));
    norm += std::norm(v);
  }
  for (C& v : c) v /= std::sqrt(norm);
  return c;
}

TEST(StdGates, TTypeCounts) {
  EXPECT_EQ(t_type_count(prepare_magic_a(kT)), 1u);
  EXPECT_EQ(t_type_count(logical_and(kX, kY, kT)), 3u);
  EXPECT_EQ(t_type_count(uncompute_and(kX, kY, kT)), 3u);
  const GateSeq tof = toffoli_7t(kX, kY, kT);
  EXPECT_EQ(t_type_count(tof), 7u);
  EXPECT_EQ(std::count_if(tof.begin(), tof.end(),
                          [](const Gate& g) { return g.kind() == GateKind::CNOT; }),
            6);
  EXPECT_EQ(std::count_if(tof.begin(), tof.end(),
                          [](const Gate& g) { return g.kind() == GateKind::H; }),
            2);
}

TEST(StdGates, SequencesArePrimitive) {
  for (const GateSeq& seq : {prepare_magic_a(kT), logical_and(kX, kY, kT),
                             uncompute_and(kX, kY, kT), toffoli_7t(kX, kY, kT)}) {
    for (const Gate& g : seq) EXPECT_FALSE(is_macro(g.kind()));
  }
}

TEST(StdGates, PrepareMagicA) {
  Dense d(1);
  d.run(prepare_magic_a(qubit(0)));
  EXPECT_NEAR(std::abs(d[0] - 1 / std::sqrt(2.0)), 0, kTol);
  EXPECT_NEAR(std::abs(d[1] - std::polar(1.0, std::numbers::pi / 4) / std::sqrt(2.0)),
              0, kTol);
}

TEST(StdGates, PreparingTwiceIsDetectable) {
  Dense once(1);
  once.run(prepare_magic_a(qubit(0)));
  Dense twice(1);
  twice.run(prepare_magic_a(qubit(0)));
  twice.run(prepare_magic_a(qubit(0)));
  EXPECT_LT(once.overlap(twice), 1 - 1e-3);
}

TEST(StdGates, LogicalAndOnBasisInputs) {
  for (std::size_t xy = 0; xy < 4; ++xy) {
    std::array<C, 4> c{};
    c[xy] = 1;
    Dense d = controls_with_a(c);
    d.run(logical_and(kX, kY, kT));
    EXPECT_GE(d.overlap(controls_with_and(c)), 1 - kTol) << xy;
  }
}

TEST(StdGates, LogicalAndOnBellPair) {
  std::array<C, 4> c{};
  c[0] = c[3] = 1 / std::sqrt(2.0);
  Dense d = controls_with_a(c);
  d.run(logical_and(kX, kY, kT));
  // (|000> + |111>)/sqrt2
  Dense want(3);
  want[0] = 1 / std::sqrt(2.0);
  want[7] = 1 / std::sqrt(2.0);
  EXPECT_GE(d.overlap(want), 1 - kTol);
}

TEST(StdGates, LogicalAndIsLinearOverRandomControls) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_controls(rng);
    Dense d = controls_with_a(c);
    d.run(logical_and(kX, kY, kT));
    EXPECT_GE(d.overlap(controls_with_and(c)), 1 - kTol);
    EXPECT_NEAR(d.norm(), 1, kTol);
  }
}

TEST(StdGates, UncomputeInvertsLogicalAnd) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_controls(rng);
    Dense d = controls_with_a(c);
    d.run(logical_and(kX, kY, kT));
    d.run(uncompute_and(kX, kY, kT));
    EXPECT_GE(d.overlap(controls_with_a(c)), 1 - kTol);
  }
}

TEST(StdGates, UncomputeRestoresAFromBasisProducts) {
  for (std::size_t xy = 0; xy < 4; ++xy) {
    std::array<C, 4> c{};
    c[xy] = 1;
    Dense d = controls_with_and(c);
    d.run(uncompute_and(kX, kY, kT));
    EXPECT_GE(d.overlap(controls_with_a(c)), 1 - kTol) << xy;
  }
}

TEST(StdGates, ToffoliMatchesCcxOnBasis) {
  for (std::size_t in = 0; in < 8; ++in) {
    Dense d(3);
    d[0] = 0;
    d[in] = 1;
    d.run(toffoli_7t(kX, kY, kT));
    const std::size_t out = (in & 3) == 3 ? in ^ 4 : in;
    EXPECT_NEAR(std::abs(d[out]), 1, kTol) << in;
  }
}

TEST(StdGates, SparseEngineAgreesWithDenseOracle) {
  const BitValue init[3] = {BitValue::One, BitValue::One, BitValue::FreshA};
  SparseState s = SparseState::product(init);
  for (const Gate& g : logical_and(kX, kY, kT)) s.apply(g);
  EXPECT_EQ(read_register(s, std::vector<QubitId>{kT}), 1u);
  EXPECT_NEAR(s.norm_squared(), 1, 1e-12);
}

TEST(StdGates, LoweringExpandsMacrosAndKeepsSpans) {
  Circuit c(3);
  c.alloc_register("Q", {kX, kY, kT}, InitState::Input);
  c.set_init(kT, InitState::MagicA);
  c.append(Gate::logical_and(kX, kY, kT));
  c.append(Gate::toffoli(kT, kY, kX));
  c.append(Gate::uncompute_and(kX, kY, kT));
  c.freeze();
  const Circuit l = lower(c);
  EXPECT_TRUE(l.frozen());
  EXPECT_EQ(l.gates().size(), 11u + 15u + 11u);
  ASSERT_EQ(l.macro_spans().size(), 2u);
  EXPECT_EQ(l.macro_spans()[0].kind, GateKind::LogicalAND);
  EXPECT_EQ(l.macro_spans()[1].begin, 26u);
  EXPECT_EQ(l.init(kT), InitState::MagicA);
}

}  // namespace
}  // namespace qarith
