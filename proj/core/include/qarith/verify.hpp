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
#include <string>
#include <vector>

#include "qarith/adders.hpp"
#include "qarith/arith_circuit.hpp"
#include "qarith/simulators.hpp"

namespace qarith {

enum class Engine { Boolean, Sparse };

struct Sampling {
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static Sampling all() { return {}; }
  static Sampling random(std::size_t samples, std::uint64_t seed) {
    return {false, samples, seed};
  }
};

struct CaseFailure {
  Values inputs;
  std::string reason;
};

struct VerificationReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<CaseFailure> failed;

  bool ok() const { return failures == 0; }
};

struct VerifyOptions {
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
  SparseOptions sparse;
  double fidelity_tol = 1e-10;
  /// Exhaustive enumeration refuses more input bits than this.
  std::size_t max_exhaustive_bits = 24;
};

/// Checks every case against `arith.expected`: output values, restoration of
/// inputs and ancillae. Garbage views are unconstrained. Runtime failures in a
/// case are reported; SupportCapError propagates.
VerificationReport verify(const ArithCircuit& arith, Engine engine,
                          Sampling sampling, const VerifyOptions& options = {});

/// Checks one input assignment; returns the failure reason or empty.
std::string check_case(const ArithCircuit& arith, Engine engine,
                       const Values& inputs, const VerifyOptions& options = {});

VerificationReport verify_adder(const AdderCircuit& adder, Sampling sampling,
                                Engine engine = Engine::Boolean,
                                const VerifyOptions& options = {});

}  // namespace qarith
