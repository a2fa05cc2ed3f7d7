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

#include "qarith/bilinear.hpp"
#include "qarith/errors.hpp"
#include "qarith/resources.hpp"
#include "qarith/simulators.hpp"
#include "qarith/verify.hpp"

namespace qarith {
namespace {

/// Rational bilinear interpolation, floored; independent of the library.
std::uint64_t reference(std::size_t k, std::uint64_t yf, std::uint64_t xf,
                        std::array<std::uint64_t, 4> c) {
  const double one = static_cast<double>(std::uint64_t{1} << k);
  const double fy = static_cast<double>(yf) / one;
  const double fx = static_cast<double>(xf) / one;
  const double v = (1 - fy) * (1 - fx) * static_cast<double>(c[0]) +
                   fy * (1 - fx) * static_cast<double>(c[1]) +
                   (1 - fy) * fx * static_cast<double>(c[2]) +
                   fy * fx * static_cast<double>(c[3]);
  return static_cast<std::uint64_t>(std::floor(v + 1e-9));
}

BilinearParams down(std::size_t n, std::size_t cw, std::uint64_t yf,
                    std::uint64_t xf, std::array<std::uint64_t, 4> c) {
  BilinearParams p;
  p.mode = BilinearMode::ScaleDown;
  p.n = n;
  p.m = n + 1;
  p.color_width = cw;
  p.y_frac = yf;
  p.x_frac = xf;
  p.colors = c;
  return p;
}

TEST(Golden, WorkedExample) {
  EXPECT_EQ(golden_bilinear(down(1, 6, 1, 0, {10, 20, 30, 40})), 15u);
}

TEST(Golden, ZeroOffsetPicksOrigin) {
  EXPECT_EQ(golden_bilinear(down(3, 8, 0, 0, {17, 200, 3, 99})), 17u);
}

TEST(Golden, WeightsSumToFullScale) {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::uint64_t y = 0; y < (1u << k); ++y) {
      for (std::uint64_t x = 0; x < (1u << k); ++x) {
        const auto w = bilinear_weights(k, y, x);
        EXPECT_EQ(w[0] + w[1] + w[2] + w[3], std::uint64_t{1} << (2 * k));
      }
    }
  }
}

TEST(Golden, ConstantImageIdentity) {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 1 + rng() % 8;
    const std::size_t cw = 1 + rng() % 12;
    const std::uint64_t c = rng() % (std::uint64_t{1} << cw);
    BilinearParams p = down(k, cw, rng() % (1u << k), rng() % (1u << k), {c, c, c, c});
    if (trial % 2 == 1) {
      p.mode = BilinearMode::ScaleUp;
      p.m = k;
    }
    ASSERT_EQ(golden_bilinear(p), c);
  }
}

TEST(Golden, MatchesFloatingReference) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    const std::uint64_t y = rng() % (1u << k);
    const std::uint64_t x = rng() % (1u << k);
    const std::array<std::uint64_t, 4> c = {rng() % 256, rng() % 256,
                                            rng() % 256, rng() % 256};
    EXPECT_EQ(golden_bilinear(down(k, 8, y, x, c)), reference(k, y, x, c));
  }
}

TEST(Golden, Errors) {
  try {
    golden_bilinear(down(2, 8, 4, 0, {0, 0, 0, 0}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "bad fraction");
  }
  EXPECT_THROW(golden_bilinear(down(2, 2, 1, 1, {4, 0, 0, 0})), DomainError);
}

TEST(ScaleDown, LayoutErrors) {
  EXPECT_THROW(build_bilinear_scale_down(2, 2, 4), DomainError);
  EXPECT_THROW(build_bilinear_scale_down(0, 2, 4), DomainError);
  try {
    build_bilinear_scale_down(3, 1, 4);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "layout error");
  }
}

TEST(ScaleDown, WorkedExampleOnCircuit) {
  const ArithCircuit c = build_bilinear_scale_down(1, 2, 6);
  const Values in{{"Y", 1}, {"X", 0},  {"C00", 10},
                  {"C10", 20}, {"C01", 30}, {"C11", 40}};
  const BooleanState s = run_boolean(c.circuit, in);
  EXPECT_EQ(read_register(s, c.output("color").qubits), 15u);
}

TEST(ScaleDown, AllFractionsTimesRandomColors) {
  const std::size_t cw = 4;
  const ArithCircuit c = build_bilinear_scale_down(1, 2, cw);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::array<std::uint64_t, 4> col = {rng() % 16, rng() % 16,
                                              rng() % 16, rng() % 16};
    for (std::uint64_t y = 0; y < 4; ++y) {
      for (std::uint64_t x = 0; x < 4; ++x) {
        const Values in{{"Y", y},        {"X", x},        {"C00", col[0]},
                        {"C10", col[1]}, {"C01", col[2]}, {"C11", col[3]}};
        const BooleanState s = run_boolean(c.circuit, in);
        EXPECT_EQ(read_register(s, c.output("color").qubits),
                  reference(1, y & 1, x & 1, col));
        EXPECT_EQ(read_register(s, c.output("y_bar").qubits), y >> 1);
        EXPECT_EQ(read_register(s, c.output("x_bar").qubits), x >> 1);
      }
    }
  }
}

TEST(ScaleDown, ContractHoldsOnWiderInstance) {
  const ArithCircuit c = build_bilinear_scale_down(2, 3, 3);
  EXPECT_TRUE(c.circuit.validate().empty());
  const auto r = verify(c, Engine::Boolean, Sampling::random(150, 4));
  EXPECT_TRUE(r.ok()) << (r.failed.empty() ? "" : r.failed[0].reason);
}

TEST(ScaleDown, ConstantImage) {
  const ArithCircuit c = build_bilinear_scale_down(1, 2, 5);
  for (std::uint64_t col : {0u, 7u, 31u}) {
    for (std::uint64_t y = 0; y < 4; ++y) {
      const Values in{{"Y", y},     {"X", 3 - y}, {"C00", col},
                      {"C10", col}, {"C01", col}, {"C11", col}};
      EXPECT_EQ(read_register(run_boolean(c.circuit, in), c.output("color").qubits),
                col);
    }
  }
}

TEST(ScaleDown, TCountIsSumOfBlocks) {
  const ArithCircuit c = build_bilinear_scale_down(1, 2, 2);
  const ResourceReport r = count(c.circuit);
  EXPECT_GT(r.t_count, 0u);
  EXPECT_EQ(r.t_count, 7 * r.toffoli + 4 * r.land + 3 * r.lunand);
}

TEST(ScaleDown, GarbageIsLabelled) {
  const ArithCircuit c = build_bilinear_scale_down(1, 2, 2);
  std::vector<std::string> names;
  for (const View& g : c.garbage) names.push_back(g.name);
  for (const char* want : {"DY", "DX", "W00", "W10", "W01", "W11", "M10", "M01",
                           "M11", "ACC_LOW", "ACC_HIGH"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
    EXPECT_EQ(c.circuit.output_roles().at(want), "garbage");
  }
}

TEST(ScaleUp, ConstantImageAndZeroOffset) {
  const ArithCircuit c = build_bilinear_scale_up(1, 1, 3);
  for (std::uint64_t y = 0; y < 4; ++y) {
    for (std::uint64_t x = 0; x < 4; ++x) {
      const Values konst{{"Y", y}, {"X", x}, {"C00", 5}, {"C10", 5}, {"C01", 5}, {"C11", 5}};
      EXPECT_EQ(read_register(run_boolean(c.circuit, konst), c.output("color").qubits), 5u);
    }
  }
  const Values origin{{"Y", 0}, {"X", 0}, {"C00", 6}, {"C10", 1}, {"C01", 2}, {"C11", 3}};
  const BooleanState s = run_boolean(c.circuit, origin);
  EXPECT_EQ(read_register(s, c.output("color").qubits), 6u);
}

TEST(ScaleUp, MatchesGoldenOnRandomColors) {
  const ArithCircuit c = build_bilinear_scale_up(1, 1, 4);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint64_t y = rng() % 4;
    const std::uint64_t x = rng() % 4;
    BilinearParams p;
    p.mode = BilinearMode::ScaleUp;
    p.n = 1;
    p.m = 1;
    p.color_width = 4;
    p.y_frac = y & 1;
    p.x_frac = x & 1;
    p.colors = {rng() % 16, rng() % 16, rng() % 16, rng() % 16};
    const Values in{{"Y", y},           {"X", x},           {"C00", p.colors[0]},
                    {"C10", p.colors[1]}, {"C01", p.colors[2]}, {"C11", p.colors[3]}};
    const BooleanState s = run_boolean(c.circuit, in);
    EXPECT_EQ(read_register(s, c.output("color").qubits), golden_bilinear(p));
    EXPECT_EQ(read_register(s, c.output("y_bar").qubits), y << 1);
  }
}

TEST(ScaleUp, ComplementReadingSwitch) {
  const ArithCircuit slice = build_bilinear_scale_up(2, 2, 3);
  const ArithCircuit comp =
      build_bilinear_scale_up(2, 2, 3, CoordinateReading::Complement);
  EXPECT_TRUE(verify(slice, Engine::Boolean, Sampling::random(100, 2)).ok());
  EXPECT_TRUE(verify(comp, Engine::Boolean, Sampling::random(100, 2)).ok());
  // Y = 0b0010: slice field Y[1..2] = 1, complement 2.
  const Values in{{"Y", 2}, {"X", 0}, {"C00", 0}, {"C10", 7}, {"C01", 0}, {"C11", 0}};
  EXPECT_EQ(read_register(run_boolean(slice.circuit, in), slice.output("color").qubits),
            reference(2, 1, 0, {0, 7, 0, 0}));
  EXPECT_EQ(read_register(run_boolean(comp.circuit, in), comp.output("color").qubits),
            reference(2, 2, 3, {0, 7, 0, 0}));
}

}  // namespace
}  // namespace qarith
