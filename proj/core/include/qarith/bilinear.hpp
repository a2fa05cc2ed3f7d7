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

#include <array>
#include <cstddef>
#include <cstdint>

#include "qarith/arith_circuit.hpp"

namespace qarith {

enum class BilinearMode { ScaleDown, ScaleUp };

/// How the fractional field of an up-scaled coordinate is read.
enum class CoordinateReading { Slice, Complement };

struct BilinearParams {
  BilinearMode mode = BilinearMode::ScaleDown;
  std::size_t n = 1;  ///< scale exponent
  std::size_t m = 2;  ///< coordinate width
  std::size_t color_width = 8;
  std::uint64_t y_frac = 0;
  std::uint64_t x_frac = 0;
  /// C(Y,X), C(Y+1,X), C(Y,X+1), C(Y+1,X+1).
  std::array<std::uint64_t, 4> colors{};

  /// Fractional bits: n when scaling down, m when scaling up.
  std::size_t k() const { return mode == BilinearMode::ScaleDown ? n : m; }
};

/// floor(sum_ij w_ij C_ij / 2^(2k)).
std::uint64_t golden_bilinear(const BilinearParams& params);

/// Weights (w00, w10, w01, w11); they sum to 2^(2k).
std::array<std::uint64_t, 4> bilinear_weights(std::size_t k, std::uint64_t y_frac,
                                              std::uint64_t x_frac);

/// Inputs Y, X (m bits) and C00, C10, C01, C11; outputs color, y_bar, x_bar.
ArithCircuit build_bilinear_scale_down(std::size_t n, std::size_t m,
                                       std::size_t color_width);

/// Inputs Y, X (m + n bits) and colors; outputs color, y_bar, x_bar.
ArithCircuit build_bilinear_scale_up(
    std::size_t n, std::size_t m, std::size_t color_width,
    CoordinateReading reading = CoordinateReading::Slice);

}  // namespace qarith
