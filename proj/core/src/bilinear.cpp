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

#include "qarith/bilinear.hpp"

#include <string>
#include <utility>

#include "assembler.hpp"
#include "kernels.hpp"
#include "qarith/errors.hpp"
#include "qarith/schedule.hpp"

namespace qarith {

namespace {

using detail::Assembler;
using detail::Emitter;
using Qubits = std::vector<QubitId>;

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

Qubits slice(const Qubits& q, std::size_t begin, std::size_t end) {
  return Qubits(q.begin() + static_cast<std::ptrdiff_t>(begin),
                q.begin() + static_cast<std::ptrdiff_t>(end));
}

const char* const kColorNames[4] = {"C00", "C10", "C01", "C11"};

struct Core {
  Qubits color;
  std::vector<View> garbage;
};

/// 2^k - v for a k-bit register v, into a fresh k+1 qubit register:
/// NOT_{k+1}(v + (2^k - 1)) with the constant held in One-tagged qubits.
Qubits complement_from_power(Emitter& e, const Qubits& v, const Qubits& ones) {
  Assembler& as = e.assembler();
  const std::size_t k = v.size();
  Qubits out{as.fresh(InitState::Zero)};
  for (std::size_t j = 0; j < k; ++j) out.push_back(as.fresh(InitState::MagicA));
  const Qubits z = as.acquire_ancillae(propagate_ancillae(k));
  detail::emit_out_of_place(e, v, ones, out, z);
  as.release_ancillae(z);
  for (QubitId q : out) e.x(q);
  return out;
}

Qubits multiply(Emitter& e, const Qubits& a, const Qubits& b,
                std::size_t width) {
  Qubits p = e.assembler().fresh(width, InitState::Zero);
  detail::emit_multiplier(e, a, b, p);
  return p;
}

void add_modular(Emitter& e, const Qubits& addend, const Qubits& acc) {
  Assembler& as = e.assembler();
  const std::size_t w = acc.size();
  const Qubits carries = as.acquire_ancillae(w - 1);
  const Qubits prop =
      as.acquire_ancillae(detail::in_place_propagate_ancillae(w, false));
  detail::emit_in_place(e, addend, acc, carries, std::nullopt, false, prop);
  as.release_ancillae(prop);
  as.release_ancillae(carries);
}

/// Weights, weight x color products, three-adder reduction, truncation.
Core emit_bilinear_core(Emitter& e, const Qubits& yt, const Qubits& xt,
                        const std::array<Qubits, 4>& colors) {
  Assembler& as = e.assembler();
  const std::size_t k = yt.size();
  const std::size_t cw = colors[0].size();

  const Qubits ones = as.fresh(k, InitState::One);
  as.name_register("K", ones);
  as.role("K", "constant 2^k - 1, restored");

  const Qubits dy = complement_from_power(e, yt, ones);
  const Qubits dx = complement_from_power(e, xt, ones);

  const Qubits w00 = multiply(e, dy, dx, 2 * k + 2);
  const Qubits w10 = multiply(e, yt, dx, 2 * k + 1);
  const Qubits w01 = multiply(e, dy, xt, 2 * k + 1);
  const Qubits w11 = multiply(e, yt, xt, 2 * k);

  // Every product is widened to the accumulator width so the reduction is
  // a chain of same-width modular adds.
  const std::size_t width = 2 * k + 2 + cw;
  const Qubits acc = multiply(e, w00, colors[0], width);
  const Qubits m10 = multiply(e, w10, colors[1], width);
  const Qubits m01 = multiply(e, w01, colors[2], width);
  const Qubits m11 = multiply(e, w11, colors[3], width);
  add_modular(e, m10, acc);
  add_modular(e, m01, acc);
  add_modular(e, m11, acc);

  Core core;
  core.color = slice(acc, 2 * k, 2 * k + cw);
  core.garbage = {
      {"DY", dy},
      {"DX", dx},
      {"W00", w00},
      {"W10", w10},
      {"W01", w01},
      {"W11", w11},
      {"M10", m10},
      {"M01", m01},
      {"M11", m11},
      {"ACC_LOW", slice(acc, 0, 2 * k)},
      {"ACC_HIGH", slice(acc, 2 * k + cw, width)},
  };
  for (const View& g : core.garbage) {
    as.name_register(g.name, g.qubits);
    as.role(g.name, "garbage");
  }
  as.name_register("COLOR", core.color);
  as.role("COLOR", "interpolated color");
  return core;
}

void check_widths(std::size_t k, std::size_t coord, std::size_t cw) {
  if (cw == 0 || k == 0) throw DomainError("layout error");
  // Register readouts are 64-bit.
  if (2 * k + 2 + cw > 64 || coord > 63) throw DomainError("layout error");
}

std::array<Qubits, 4> alloc_colors(Assembler& as, std::size_t cw) {
  std::array<Qubits, 4> c;
  for (std::size_t i = 0; i < 4; ++i) {
    c[i] = as.fresh(cw, InitState::Input);
    as.name_register(kColorNames[i], c[i]);
  }
  return c;
}

std::vector<View> color_inputs(const std::array<Qubits, 4>& c) {
  std::vector<View> v;
  for (std::size_t i = 0; i < 4; ++i) v.push_back({kColorNames[i], c[i]});
  return v;
}

std::array<std::uint64_t, 4> read_colors(const Values& in) {
  return {in.at("C00"), in.at("C10"), in.at("C01"), in.at("C11")};
}

}  // namespace

std::array<std::uint64_t, 4> bilinear_weights(std::size_t k, std::uint64_t y_frac,
                                              std::uint64_t x_frac) {
  if (k == 0 || k > 31) throw DomainError("bad fraction");
  const std::uint64_t one = std::uint64_t{1} << k;
  if (y_frac >= one || x_frac >= one) throw DomainError("bad fraction");
  return {(one - y_frac) * (one - x_frac), y_frac * (one - x_frac),
          (one - y_frac) * x_frac, y_frac * x_frac};
}

std::uint64_t golden_bilinear(const BilinearParams& p) {
  const std::size_t k = p.k();
  const auto w = bilinear_weights(k, p.y_frac, p.x_frac);
  if (p.color_width == 0) throw DomainError("bad color");
  // The weighted sum stays below 2^(2k + color_width).
  if (2 * k + p.color_width > 62) throw DomainError("widths too large");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (p.colors[i] > low_mask(p.color_width)) throw DomainError("bad color");
    total += w[i] * p.colors[i];
  }
  return total >> (2 * k);
}

ArithCircuit build_bilinear_scale_down(std::size_t n, std::size_t m,
                                       std::size_t color_width) {
  if (n == 0 || m <= n) throw DomainError("layout error");
  check_widths(n, m, color_width);
  Assembler as;
  Emitter e(as, detail::AdderStyle::Proposed);

  const Qubits y = as.fresh(m, InitState::Input);
  const Qubits x = as.fresh(m, InitState::Input);
  as.name_register("Y", y);
  as.name_register("X", x);
  const auto colors = alloc_colors(as, color_width);

  // Location of the scaled pixel is the integer part: no gates.
  const Qubits y_bar = slice(y, n, m);
  const Qubits x_bar = slice(x, n, m);
  Core core = emit_bilinear_core(e, slice(y, 0, n), slice(x, 0, n), colors);

  std::vector<View> inputs{{"Y", y}, {"X", x}};
  for (View& v : color_inputs(colors)) inputs.push_back(std::move(v));
  return ArithCircuit{
      .design = "bilinear-down",
      .circuit = as.finish(),
      .inputs = std::move(inputs),
      .outputs = {{"color", core.color}, {"y_bar", y_bar}, {"x_bar", x_bar}},
      .garbage = std::move(core.garbage),
      .expected =
          [n, m, color_width](const Values& in) {
            BilinearParams p;
            p.mode = BilinearMode::ScaleDown;
            p.n = n;
            p.m = m;
            p.color_width = color_width;
            p.y_frac = in.at("Y") & low_mask(n);
            p.x_frac = in.at("X") & low_mask(n);
            p.colors = read_colors(in);
            return Values{{"color", golden_bilinear(p)},
                          {"y_bar", in.at("Y") >> n},
                          {"x_bar", in.at("X") >> n}};
          },
  };
}

ArithCircuit build_bilinear_scale_up(std::size_t n, std::size_t m,
                                     std::size_t color_width,
                                     CoordinateReading reading) {
  if (n == 0 || m == 0) throw DomainError("layout error");
  check_widths(m, m + 2 * n, color_width);
  Assembler as;
  Emitter e(as, detail::AdderStyle::Proposed);

  const std::size_t coord = m + n;
  const Qubits y = as.fresh(coord, InitState::Input);
  const Qubits x = as.fresh(coord, InitState::Input);
  as.name_register("Y", y);
  as.name_register("X", x);
  const auto colors = alloc_colors(as, color_width);

  // Up-scaled location: the coordinate shifted left by n, as fresh low bits.
  Qubits y_bar = as.fresh(n, InitState::Zero);
  Qubits x_bar = as.fresh(n, InitState::Zero);
  as.name_register("YPAD", y_bar);
  as.name_register("XPAD", x_bar);
  y_bar.insert(y_bar.end(), y.begin(), y.end());
  x_bar.insert(x_bar.end(), x.begin(), x.end());

  const Qubits yt = slice(y, n - 1, n - 1 + m);
  const Qubits xt = slice(x, n - 1, n - 1 + m);
  if (reading == CoordinateReading::Complement) {
    for (QubitId q : yt) e.x(q);
    for (QubitId q : xt) e.x(q);
  }
  Core core = emit_bilinear_core(e, yt, xt, colors);
  if (reading == CoordinateReading::Complement) {
    for (QubitId q : yt) e.x(q);
    for (QubitId q : xt) e.x(q);
  }

  std::vector<View> inputs{{"Y", y}, {"X", x}};
  for (View& v : color_inputs(colors)) inputs.push_back(std::move(v));
  return ArithCircuit{
      .design = "bilinear-up",
      .circuit = as.finish(),
      .inputs = std::move(inputs),
      .outputs = {{"color", core.color}, {"y_bar", y_bar}, {"x_bar", x_bar}},
      .garbage = std::move(core.garbage),
      .expected =
          [n, m, color_width, reading](const Values& in) {
            auto frac = [&](std::uint64_t v) {
              std::uint64_t f = (v >> (n - 1)) & low_mask(m);
              return reading == CoordinateReading::Complement
                         ? f ^ low_mask(m)
                         : f;
            };
            BilinearParams p;
            p.mode = BilinearMode::ScaleUp;
            p.n = n;
            p.m = m;
            p.color_width = color_width;
            p.y_frac = frac(in.at("Y"));
            p.x_frac = frac(in.at("X"));
            p.colors = read_colors(in);
            return Values{{"color", golden_bilinear(p)},
                          {"y_bar", in.at("Y") << n},
                          {"x_bar", in.at("X") << n}};
          },
  };
}

}  // namespace qarith
