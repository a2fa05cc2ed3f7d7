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
#include <vector>

namespace qarith {

/// Abstract operand of a lookahead site, independent of any qubit layout.
///   A(i), B(i)   input bits a_i, b_i
///   P(0, i)      p_i = a_i ^ b_i (held in b_i once computed)
///   P(t, m)      propagate of block [2^t m, 2^t (m+1)), t >= 1
///   G(j)         generate accumulator for carry position j (1-based)
struct LookaheadNode {
  enum class Kind : std::uint8_t { A, B, Propagate, Generate };

  Kind kind;
  std::size_t level = 0;
  std::size_t index = 0;

  static LookaheadNode a(std::size_t i) { return {Kind::A, 0, i}; }
  static LookaheadNode b(std::size_t i) { return {Kind::B, 0, i}; }
  static LookaheadNode p(std::size_t t, std::size_t m) {
    return {Kind::Propagate, t, m};
  }
  static LookaheadNode g(std::size_t j) { return {Kind::Generate, 0, j}; }

  friend bool operator==(const LookaheadNode&, const LookaheadNode&) = default;
};

/// One Toffoli-equivalent site: target ^= left . right.
struct LookaheadSite {
  LookaheadNode left;
  LookaheadNode right;
  LookaheadNode target;
};

/// Carry-lookahead tree for n-bit addition realizing c_{i+1} = g_i ^ p_i c_i.
///
/// `p_pairs` lists propagate-tree compute sites in compute order; each is
/// uncomputed by the same site in reverse order. `g_sites` and `c_sites` are
/// the XOR-accumulating generate and carry rounds in emission order.
struct LookaheadSchedule {
  std::size_t n = 0;
  std::vector<LookaheadSite> initial_g;
  std::vector<LookaheadSite> p_pairs;
  std::vector<LookaheadSite> g_sites;
  std::vector<LookaheadSite> c_sites;

  /// |initial_g| + 2|p_pairs| + |g_sites| + |c_sites|.
  std::size_t toffoli_equivalent_sites() const {
    return initial_g.size() + 2 * p_pairs.size() + g_sites.size() +
           c_sites.size();
  }
};

/// Throws DomainError("empty adder") for n == 0.
LookaheadSchedule lookahead_schedule(std::size_t n);

/// Number of ones in the binary expansion of n; w(0) = 0.
std::uint64_t weight(std::uint64_t n);

/// floor(log2 n) with the convention floor_log2(0) = floor_log2(1) = 0.
std::uint64_t floor_log2(std::uint64_t n);

/// Ancilla count of the propagate tree: n - w(n) - floor(log2 n).
std::size_t propagate_ancillae(std::size_t n);

}  // namespace qarith
