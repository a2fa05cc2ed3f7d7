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

#include "qarith/adders.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "assembler.hpp"
#include "kernels.hpp"
#include "qarith/schedule.hpp"

namespace qarith {

namespace {

using detail::Emitter;

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Maps schedule nodes onto physical qubits.
class NodeResolver {
 public:
  NodeResolver(const LookaheadSchedule& s, std::span<const QubitId> a,
               std::span<const QubitId> b, std::span<const QubitId> g,
               std::span<const QubitId> propagate)
      : a_(a), b_(b), g_(g) {
    if (propagate.size() < s.p_pairs.size()) {
      throw CircuitError("not enough propagate ancillae");
    }
    for (std::size_t k = 0; k < s.p_pairs.size(); ++k) {
      const LookaheadNode& t = s.p_pairs[k].target;
      p_.emplace(std::make_pair(t.level, t.index), propagate[k]);
    }
  }

  QubitId operator()(const LookaheadNode& node) const {
    switch (node.kind) {
      case LookaheadNode::Kind::A:
        return a_[node.index];
      case LookaheadNode::Kind::B:
        return b_[node.index];
      case LookaheadNode::Kind::Generate:
        return g_[node.index];
      case LookaheadNode::Kind::Propagate:
        if (node.level == 0) return b_[node.index];
        return p_.at({node.level, node.index});
    }
    throw CircuitError("bad lookahead node");
  }

 private:
  std::span<const QubitId> a_;
  std::span<const QubitId> b_;
  std::span<const QubitId> g_;
  std::map<std::pair<std::size_t, std::size_t>, QubitId> p_;
};

void emit_site_toffoli(Emitter& e, const NodeResolver& r,
                       const LookaheadSite& s) {
  e.toffoli(r(s.left), r(s.right), r(s.target));
}

/// Propagate tree, generate rounds, carry rounds, propagate tree undone.
/// Maps G[j] = g_j (block generates) to G[j] = c_j.
void emit_forward_network(Emitter& e, const LookaheadSchedule& s,
                          const NodeResolver& r) {
  for (const auto& site : s.p_pairs) {
    e.compute_and(r(site.left), r(site.right), r(site.target));
  }
  for (const auto& site : s.g_sites) emit_site_toffoli(e, r, site);
  for (const auto& site : s.c_sites) emit_site_toffoli(e, r, site);
  for (auto it = s.p_pairs.rbegin(); it != s.p_pairs.rend(); ++it) {
    e.uncompute_and(r(it->left), r(it->right), r(it->target));
  }
}

/// Inverse of the carry part of `emit_forward_network`: G[j] = c_j back to
/// the per-bit generates.
void emit_reverse_network(Emitter& e, const LookaheadSchedule& s,
                          const NodeResolver& r) {
  for (const auto& site : s.p_pairs) {
    e.compute_and(r(site.left), r(site.right), r(site.target));
  }
  for (auto it = s.c_sites.rbegin(); it != s.c_sites.rend(); ++it) {
    emit_site_toffoli(e, r, *it);
  }
  for (auto it = s.g_sites.rbegin(); it != s.g_sites.rend(); ++it) {
    emit_site_toffoli(e, r, *it);
  }
  for (auto it = s.p_pairs.rbegin(); it != s.p_pairs.rend(); ++it) {
    e.uncompute_and(r(it->left), r(it->right), r(it->target));
  }
}

/// Top bit of the block a propagate ancilla covers; used to place the
/// ancilla next to that bit as in the reference drawings.
std::size_t anchor_bit(const LookaheadNode& p) {
  return ((p.index + 1) << p.level) - 1;
}

}  // namespace

std::string_view to_string(AdderMode mode) {
  return mode == AdderMode::Proposed ? "proposed" : "draper";
}

std::size_t AdderLayout::expected_qubits(AdderKind kind, std::size_t n) {
  const std::size_t base = 4 * n - weight(n) - floor_log2(n);
  return kind == AdderKind::OutOfPlace ? base + 1 : base;
}

namespace detail {

void emit_out_of_place(Emitter& e, std::span<const QubitId> a,
                       std::span<const QubitId> b, std::span<const QubitId> x,
                       std::span<const QubitId> propagate) {
  const std::size_t n = a.size();
  const LookaheadSchedule s = lookahead_schedule(n);
  const NodeResolver r(s, a, b, x, propagate);

  for (const auto& site : s.initial_g) {
    e.compute_and(r(site.left), r(site.right), r(site.target));
  }
  // p_0 is never consumed by the tree; bit 0 is summed directly into x[0].
  for (std::size_t i = 1; i < n; ++i) e.cnot(a[i], b[i]);
  emit_forward_network(e, s, r);
  e.cnot(b[0], x[0]);
  for (std::size_t i = 1; i < n; ++i) e.cnot(b[i], x[i]);
  e.cnot(a[0], x[0]);
  for (std::size_t i = 1; i < n; ++i) e.cnot(a[i], b[i]);
}

std::size_t in_place_propagate_ancillae(std::size_t n, bool with_carry_out) {
  if (n == 0) return 0;
  return propagate_ancillae(with_carry_out ? n : n - 1);
}

void emit_in_place(Emitter& e, std::span<const QubitId> a,
                   std::span<const QubitId> b, std::span<const QubitId> carries,
                   std::optional<QubitId> carry_out, bool carry_out_fresh,
                   std::span<const QubitId> propagate) {
  const std::size_t n = a.size();
  if (n == 0) throw DomainError("empty adder");
  if (b.size() != n || carries.size() + 1 != n) {
    throw CircuitError("in-place adder operand widths disagree");
  }
  const std::size_t width = carry_out ? n : n - 1;

  // g[j] is the generate / carry accumulator for position j (1-based).
  std::vector<QubitId> g(width + 1);
  for (std::size_t j = 1; j <= width; ++j) {
    g[j] = j < n ? carries[j - 1] : *carry_out;
  }

  // Forward: carries c_1..c_width of a + b.
  for (std::size_t i = 0; i < width; ++i) {
    if (i + 1 == n && !carry_out_fresh) {
      e.toffoli(a[i], b[i], g[i + 1]);
    } else {
      e.compute_and(a[i], b[i], g[i + 1]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) e.cnot(a[i], b[i]);
  if (width > 0) {
    const LookaheadSchedule s = lookahead_schedule(width);
    emit_forward_network(e, s, NodeResolver(s, a, b, g, propagate));
  }
  for (std::size_t i = 1; i < n; ++i) e.cnot(carries[i - 1], b[i]);

  // Erase c_1..c_{n-1}: they are also the carries of a + NOT(s) on the low
  // n-1 bits, so the inverse carry computation on (a, NOT s) clears them.
  const std::size_t low = n - 1;
  if (low == 0) return;
  for (std::size_t i = 0; i < low; ++i) e.x(b[i]);
  for (std::size_t i = 1; i < low; ++i) e.cnot(a[i], b[i]);
  {
    const LookaheadSchedule s = lookahead_schedule(low);
    emit_reverse_network(e, s, NodeResolver(s, a, b, g, propagate));
  }
  for (std::size_t i = 1; i < low; ++i) e.cnot(a[i], b[i]);
  for (std::size_t i = 0; i < low; ++i) e.uncompute_and(a[i], b[i], g[i + 1]);
  for (std::size_t i = 0; i < low; ++i) e.x(b[i]);
}

void emit_ctrl_add(Emitter& e, QubitId ctl, std::span<const QubitId> a,
                   std::span<const QubitId> acc) {
  const std::size_t n = a.size();
  if (n == 0) throw DomainError("empty adder");
  const bool extended = acc.size() == n + 1;
  if (!extended && acc.size() != n) {
    throw CircuitError("accumulator must have n or n+1 qubits");
  }
  Assembler& as = e.assembler();
  const std::vector<QubitId> term = as.acquire_ancillae(n);
  for (std::size_t i = 0; i < n; ++i) e.compute_and(ctl, a[i], term[i]);

  const std::vector<QubitId> carries = as.acquire_ancillae(n - 1);
  const std::vector<QubitId> propagate =
      as.acquire_ancillae(in_place_propagate_ancillae(n, extended));
  std::optional<QubitId> carry_out;
  if (extended) carry_out = acc[n];
  emit_in_place(e, term, acc.first(n), carries, carry_out, false, propagate);
  as.release_ancillae(propagate);
  as.release_ancillae(carries);

  for (std::size_t i = n; i-- > 0;) e.uncompute_and(ctl, a[i], term[i]);
  as.release_ancillae(term);
}

void emit_multiplier(Emitter& e, std::span<const QubitId> a,
                     std::span<const QubitId> b, std::span<const QubitId> p) {
  const std::size_t wa = a.size();
  const std::size_t wb = b.size();
  if (wa == 0 || wb == 0) throw DomainError("empty");
  if (p.size() < wa + wb) throw CircuitError("product register too narrow");
  // The b_0 partial product lands on a zeroed register: a Toffoli array.
  for (std::size_t j = 0; j < wa; ++j) e.toffoli(a[j], b[0], p[j]);
  // Ctrl-Add i is placed at offset i, so no shifting gates are needed.
  for (std::size_t i = 1; i < wb; ++i) {
    emit_ctrl_add(e, b[i], a, p.subspan(i, wa + 1));
  }
}

}  // namespace detail

AdderCircuit build_out_of_place(std::size_t n, AdderMode mode) {
  const LookaheadSchedule s = lookahead_schedule(n);
  const auto style = mode == AdderMode::Proposed ? detail::AdderStyle::Proposed
                                                 : detail::AdderStyle::Draper;
  detail::Assembler as;
  Emitter e(as, style);

  AdderLayout layout;
  layout.n = n;
  layout.kind = AdderKind::OutOfPlace;
  layout.mode = mode;
  layout.z.resize(s.p_pairs.size());

  // Physical order follows the reference drawing: X_j, a_j, b_j per bit,
  // each propagate ancilla just before X of its block's top bit.
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t k = 0; k < s.p_pairs.size(); ++k) {
      if (anchor_bit(s.p_pairs[k].target) == j) {
        layout.z[k] = as.fresh(e.ancilla_state());
      }
    }
    layout.x.push_back(
        as.fresh(j == 0 ? InitState::Zero : e.ancilla_state()));
    if (j < n) {
      layout.a.push_back(as.fresh(InitState::Input));
      layout.b.push_back(as.fresh(InitState::Input));
    }
  }
  as.name_register("A", layout.a);
  as.name_register("B", layout.b);
  as.name_register("X", layout.x);
  as.name_register("Z", layout.z);
  as.role("A", "restored input a");
  as.role("B", "restored input b");
  as.role("X", "sum bits s_0..s_n");
  as.role("Z", "propagate ancillae, restored");

  detail::emit_out_of_place(e, layout.a, layout.b, layout.x, layout.z);

  ArithCircuit arith{
      .design = std::string(mode == AdderMode::Proposed ? "oop-proposed"
                                                        : "oop-draper"),
      .circuit = as.finish(),
      .inputs = {{"A", layout.a}, {"B", layout.b}},
      .outputs = {{"sum", layout.x}},
      .garbage = {},
      .expected =
          [n](const Values& in) {
            const std::uint64_t sum = in.at("A") + in.at("B");
            return Values{{"sum", sum & low_mask(n + 1)}};
          },
  };
  return AdderCircuit{std::move(arith), std::move(layout)};
}

AdderCircuit build_in_place(std::size_t n, AdderMode mode) {
  const LookaheadSchedule s = lookahead_schedule(n);
  const auto style = mode == AdderMode::Proposed ? detail::AdderStyle::Proposed
                                                 : detail::AdderStyle::Draper;
  detail::Assembler as;
  Emitter e(as, style);

  AdderLayout layout;
  layout.n = n;
  layout.kind = AdderKind::InPlace;
  layout.mode = mode;
  layout.x.resize(detail::in_place_propagate_ancillae(n, true));

  // a_i, b_i, then z_{i+1}; propagate ancillae sit just before z of their
  // block's top bit.
  for (std::size_t i = 0; i < n; ++i) {
    layout.a.push_back(as.fresh(InitState::Input));
    layout.b.push_back(as.fresh(InitState::Input));
    for (std::size_t k = 0; k < s.p_pairs.size(); ++k) {
      if (anchor_bit(s.p_pairs[k].target) == i + 1) {
        layout.x[k] = as.fresh(e.ancilla_state());
      }
    }
    layout.z.push_back(as.fresh(e.ancilla_state()));
  }
  as.name_register("A", layout.a);
  as.name_register("B", layout.b);
  as.name_register("Z", layout.z);
  as.name_register("X", layout.x);
  as.role("A", "restored input a");
  as.role("B", "sum bits s_0..s_{n-1}");
  as.role("Z", "carry ancillae, Z[n] = s_n");
  as.role("X", "propagate ancillae, restored");

  const std::span<const QubitId> z(layout.z);
  detail::emit_in_place(e, layout.a, layout.b, z.first(n - 1), z.back(), true,
                        layout.x);

  ArithCircuit arith{
      .design = std::string(mode == AdderMode::Proposed ? "ip-proposed"
                                                        : "ip-draper"),
      .circuit = as.finish(),
      .inputs = {{"A", layout.a}, {"B", layout.b}},
      .outputs = {{"b", layout.b}, {"carry_out", {layout.z.back()}}},
      .garbage = {},
      .expected =
          [n](const Values& in) {
            const std::uint64_t sum = in.at("A") + in.at("B");
            return Values{{"b", sum & low_mask(n)},
                          {"carry_out", (sum >> n) & 1}};
          },
  };
  return AdderCircuit{std::move(arith), std::move(layout)};
}

ArithCircuit build_ctrl_add(std::size_t n, AccumulatorWidth width) {
  if (n == 0) throw DomainError("empty adder");
  detail::Assembler as;
  Emitter e(as, detail::AdderStyle::Proposed);
  const std::size_t acc_width =
      width == AccumulatorWidth::Extended ? n + 1 : n;

  const QubitId ctl = as.fresh(InitState::Input);
  const std::vector<QubitId> a = as.fresh(n, InitState::Input);
  const std::vector<QubitId> acc = as.fresh(acc_width, InitState::Input);
  as.name_register("CTL", {ctl});
  as.name_register("A", a);
  as.name_register("ACC", acc);
  as.role("ACC", "acc + ctl.a");

  detail::emit_ctrl_add(e, ctl, a, acc);

  return ArithCircuit{
      .design = width == AccumulatorWidth::Extended ? "ctrl-add"
                                                    : "ctrl-add-mod",
      .circuit = as.finish(),
      .inputs = {{"CTL", {ctl}}, {"A", a}, {"ACC", acc}},
      .outputs = {{"acc", acc}},
      .garbage = {},
      .expected =
          [acc_width](const Values& in) {
            const std::uint64_t add = in.at("CTL") != 0 ? in.at("A") : 0;
            return Values{{"acc", (in.at("ACC") + add) & low_mask(acc_width)}};
          },
  };
}

}  // namespace qarith
