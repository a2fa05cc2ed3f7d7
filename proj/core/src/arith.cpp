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

#include "qarith/arith.hpp"

#include <string>
#include <utility>

#include "assembler.hpp"
#include "kernels.hpp"
#include "qarith/errors.hpp"
#include "qarith/schedule.hpp"

namespace qarith {

namespace {

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

ArithCircuit build_subtractor(std::size_t n) {
  if (n == 0) throw DomainError("empty");
  detail::Assembler as;
  detail::Emitter e(as, detail::AdderStyle::Proposed);

  const std::vector<QubitId> a = as.fresh(n, InitState::Input);
  const std::vector<QubitId> b = as.fresh(n, InitState::Input);
  std::vector<QubitId> diff{as.fresh(InitState::Zero)};
  for (std::size_t j = 1; j <= n; ++j) {
    diff.push_back(as.fresh(InitState::MagicA));
  }
  const std::vector<QubitId> z =
      as.fresh(propagate_ancillae(n), InitState::MagicA);
  as.name_register("A", a);
  as.name_register("B", b);
  as.name_register("D", diff);
  as.name_register("Z", z);
  as.role("D", "b - a, two's complement");

  // a + NOT b = 2^n - 1 - (b - a); flipping the low n bits gives b - a.
  for (QubitId q : b) e.x(q);
  detail::emit_out_of_place(e, a, b, diff, z);
  for (QubitId q : b) e.x(q);
  for (std::size_t i = 0; i < n; ++i) e.x(diff[i]);

  return ArithCircuit{
      .design = "subtractor",
      .circuit = as.finish(),
      .inputs = {{"A", a}, {"B", b}},
      .outputs = {{"diff", diff}},
      .garbage = {},
      .expected =
          [n](const Values& in) {
            return Values{{"diff", (in.at("B") - in.at("A")) & low_mask(n + 1)}};
          },
  };
}

ArithCircuit build_multiplier(std::size_t n) { return build_multiplier(n, n); }

ArithCircuit build_multiplier(std::size_t wa, std::size_t wb) {
  if (wa == 0 || wb == 0) throw DomainError("empty");
  detail::Assembler as;
  detail::Emitter e(as, detail::AdderStyle::Proposed);

  const std::vector<QubitId> a = as.fresh(wa, InitState::Input);
  const std::vector<QubitId> b = as.fresh(wb, InitState::Input);
  const std::vector<QubitId> p = as.fresh(wa + wb, InitState::Zero);
  as.name_register("A", a);
  as.name_register("B", b);
  as.name_register("P", p);
  as.role("P", "a * b");

  detail::emit_multiplier(e, a, b, p);

  const std::size_t width = wa + wb;
  return ArithCircuit{
      .design = "multiplier",
      .circuit = as.finish(),
      .inputs = {{"A", a}, {"B", b}},
      .outputs = {{"product", p}},
      .garbage = {},
      .expected =
          [width](const Values& in) {
            return Values{
                {"product", (in.at("A") * in.at("B")) & low_mask(width)}};
          },
  };
}

}  // namespace qarith
