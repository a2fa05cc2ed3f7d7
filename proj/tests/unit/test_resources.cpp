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

#include <cmath>

#include "oracles.hpp"
#include "qarith/adders.hpp"
#include "qarith/arith.hpp"
#include "qarith/bilinear.hpp"
#include "qarith/errors.hpp"
#include "qarith/resources.hpp"
#include "qarith/stdgates.hpp"

namespace qarith {
namespace {

using testing::log2_floor;
using testing::weight_series;

TEST(Formula, TableOneAtFour) {
  EXPECT_EQ(formula(DesignId::OOP_Draper, 4), Rational(70));
  EXPECT_EQ(formula(DesignId::OOP_Thapliyal, 4), Rational(126));
  EXPECT_EQ(formula(DesignId::OOP_Babu, 4), Rational(216));
  EXPECT_EQ(formula(DesignId::OOP_Proposed, 4), Rational(51));
}

TEST(Formula, TableTwoAtFour) {
  EXPECT_EQ(formula(DesignId::IP_Draper, 4), Rational(105));
  EXPECT_EQ(formula(DesignId::IP_Thapliyal, 4), Rational(175));
  EXPECT_EQ(formula(DesignId::IP_Cheng, 4), Rational(1036, 6));
  EXPECT_EQ(formula(DesignId::IP_Proposed, 4), Rational(64));
}

TEST(Formula, ProposedRowsAtLargerWidths) {
  EXPECT_EQ(formula(DesignId::OOP_Proposed, 8), Rational(137));
  EXPECT_EQ(formula(DesignId::OOP_Proposed, 16), Rational(323));
  EXPECT_EQ(formula(DesignId::OOP_Proposed, 64), Rational(1495));
  EXPECT_EQ(formula(DesignId::IP_Proposed, 8), Rational(206));
  EXPECT_EQ(formula(DesignId::IP_Proposed, 16), Rational(532));
  EXPECT_EQ(formula(DesignId::OOP_Draper, 8), Rational(189));
}

TEST(Formula, ExpressionsAgainstIndependentEvaluation) {
  for (std::int64_t n = 2; n <= 300; ++n) {
    const std::int64_t w = weight_series(n), l = log2_floor(n);
    const std::int64_t w1 = weight_series(n - 1), l1 = log2_floor(n - 1);
    const auto u = static_cast<std::uint64_t>(n);
    EXPECT_EQ(formula(DesignId::OOP_Proposed, u), Rational(25 * n - 14 * w - 14 * l - 7));
    EXPECT_EQ(formula(DesignId::IP_Draper, u),
              Rational(70 * n - 21 * (w + l + w1 + l1) - 49));
    EXPECT_EQ(formula(DesignId::IP_Thapliyal, u) * 4, Rational(203 * n - 112));
    EXPECT_EQ(formula(DesignId::IP_Cheng, u) * 6,
              Rational(14 * n * n * n + 21 * n * n - 49 * n));
  }
}

TEST(Formula, ThapliyalInPlaceIsNotRounded) {
  EXPECT_EQ(formula(DesignId::IP_Thapliyal, 5), Rational(203 * 5 - 112, 4));
  EXPECT_EQ(to_string(formula(DesignId::IP_Thapliyal, 5)), "903/4");
}

TEST(Formula, RationalPrinting) {
  EXPECT_EQ(to_string(formula(DesignId::IP_Cheng, 4)), "518/3");
  EXPECT_EQ(to_string(Rational(64)), "64");
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}

TEST(Formula, Domain) {
  for (DesignId d : {DesignId::IP_Proposed, DesignId::IP_Draper,
                     DesignId::IP_Thapliyal, DesignId::IP_Cheng}) {
    try {
      formula(d, 1);
      FAIL();
    } catch (const DomainError& e) {
      EXPECT_STREQ(e.what(), "formula domain");
    }
  }
  EXPECT_THROW(formula(DesignId::OOP_Babu, 0), DomainError);
  EXPECT_EQ(formula(DesignId::OOP_Babu, 1), Rational(54));
}

TEST(Savings, AsymptoticClaims) {
  auto two_places = [](double v) { return std::round(v * 100) / 100; };
  EXPECT_DOUBLE_EQ(two_places(asymptotic_savings(DesignId::OOP_Proposed, DesignId::OOP_Draper)), 28.57);
  EXPECT_DOUBLE_EQ(two_places(asymptotic_savings(DesignId::OOP_Proposed, DesignId::OOP_Babu)), 53.70);
  EXPECT_DOUBLE_EQ(two_places(asymptotic_savings(DesignId::IP_Proposed, DesignId::IP_Draper)), 34.29);
  EXPECT_DOUBLE_EQ(two_places(asymptotic_savings(DesignId::IP_Proposed, DesignId::IP_Thapliyal)), 9.36);
  EXPECT_DOUBLE_EQ(asymptotic_savings(DesignId::IP_Proposed, DesignId::IP_Cheng), 100.0);
  EXPECT_THROW(asymptotic_savings(DesignId::IP_Cheng, DesignId::IP_Proposed), DomainError);
}

TEST(Savings, FiniteWidth) {
  EXPECT_DOUBLE_EQ(savings(DesignId::OOP_Draper, DesignId::OOP_Draper, 8), 0.0);
  EXPECT_NEAR(savings(DesignId::OOP_Proposed, DesignId::OOP_Draper, 4),
              100.0 * (1.0 - 51.0 / 70.0), 1e-12);
  EXPECT_THROW(savings(DesignId::OOP_Proposed, DesignId::IP_Draper, 4), DomainError);
}

TEST(Count, AdderReports) {
  const ResourceReport oop = count(build_out_of_place(4, AdderMode::Proposed).circuit(),
                                   DesignId::OOP_Proposed, 4);
  EXPECT_EQ(oop.t_count, 51u);
  EXPECT_EQ(oop.qubits, 14u);
  EXPECT_TRUE(*oop.match);
  const ResourceReport d8 = count(build_out_of_place(8, AdderMode::Draper).circuit(),
                                  DesignId::OOP_Draper, 8);
  EXPECT_EQ(d8.t_count, 189u);
  EXPECT_TRUE(*d8.match);
  EXPECT_FALSE(count(build_subtractor(2).circuit).formula_expected.has_value());
}

TEST(Count, MacroAndLoweredTCountsAgree) {
  std::vector<Circuit> circuits;
  for (std::size_t n = 1; n <= 12; ++n) {
    circuits.push_back(build_out_of_place(n, AdderMode::Proposed).circuit());
    circuits.push_back(build_in_place(n, AdderMode::Proposed).circuit());
    circuits.push_back(build_in_place(n, AdderMode::Draper).circuit());
  }
  circuits.push_back(build_multiplier(4).circuit);
  circuits.push_back(build_subtractor(5).circuit);
  circuits.push_back(build_bilinear_scale_down(1, 2, 3).circuit);
  for (const Circuit& c : circuits) {
    const Circuit l = lower(c);
    EXPECT_EQ(t_count(c), t_count(l));
    std::uint64_t prims = 0;
    for (const Gate& g : l.gates()) prims += is_t_type(g.kind());
    const ResourceReport r = count(c);
    EXPECT_EQ(t_count(l), prims + r.land);
  }
}

TEST(Count, TDepthLayering) {
  Circuit c(2);
  c.alloc_register("Q", {qubit(0), qubit(1)}, InitState::Zero);
  c.append(Gate::t(qubit(0)));
  c.append(Gate::t(qubit(1)));   // same layer
  c.append(Gate::cnot(qubit(0), qubit(1)));
  c.append(Gate::tdg(qubit(1)));  // third layer
  EXPECT_EQ(t_depth(c), 2u);
  const Circuit& adder = build_in_place(8, AdderMode::Proposed).circuit();
  EXPECT_EQ(t_depth(adder), t_depth(adder));
  EXPECT_GT(t_depth(adder), 0u);
  EXPECT_LE(t_depth(adder), t_count(adder));
}

}  // namespace
}  // namespace qarith
