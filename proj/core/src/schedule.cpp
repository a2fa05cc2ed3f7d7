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

#include "qarith/schedule.hpp"

#include <bit>

#include "qarith/errors.hpp"

namespace qarith {

std::uint64_t weight(std::uint64_t n) {
  return static_cast<std::uint64_t>(std::popcount(n));
}

std::uint64_t floor_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(n) - 1);
}

std::size_t propagate_ancillae(std::size_t n) {
  if (n == 0) return 0;
  return n - weight(n) - floor_log2(n);
}

LookaheadSchedule lookahead_schedule(std::size_t n) {
  if (n == 0) throw DomainError("empty adder");
  using Node = LookaheadNode;

  LookaheadSchedule s;
  s.n = n;
  const std::size_t levels = floor_log2(n);

  for (std::size_t i = 0; i < n; ++i) {
    s.initial_g.push_back({Node::a(i), Node::b(i), Node::g(i + 1)});
  }

  // P rounds: P_t[m] = P_{t-1}[2m] . P_{t-1}[2m+1], 1 <= m < floor(n / 2^t).
  // Block 0 never needs a propagate since the carry into bit 0 is zero.
  for (std::size_t t = 1; t + 1 <= levels; ++t) {
    for (std::size_t m = 1; m < (n >> t); ++m) {
      s.p_pairs.push_back(
          {Node::p(t - 1, 2 * m), Node::p(t - 1, 2 * m + 1), Node::p(t, m)});
    }
  }

  // G rounds: G[2^t m + 2^t] ^= G[2^t m + 2^{t-1}] . P_{t-1}[2m+1].
  for (std::size_t t = 1; t <= levels; ++t) {
    const std::size_t step = std::size_t{1} << t;
    for (std::size_t m = 0; m < (n >> t); ++m) {
      s.g_sites.push_back({Node::g(step * m + step / 2),
                           Node::p(t - 1, 2 * m + 1),
                           Node::g(step * m + step)});
    }
  }

  // C rounds, top level first: G[2^t m + 2^{t-1}] ^= G[2^t m] . P_{t-1}[2m].
  // Every position that is not a power of two is filled exactly once.
  for (std::size_t t = levels; t >= 1; --t) {
    const std::size_t step = std::size_t{1} << t;
    const std::size_t half = step / 2;
    if (n < half) continue;
    for (std::size_t m = 1; m <= (n - half) / step; ++m) {
      s.c_sites.push_back(
          {Node::g(step * m), Node::p(t - 1, 2 * m), Node::g(step * m + half)});
    }
  }
  return s;
}

}  // namespace qarith
