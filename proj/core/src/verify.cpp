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

#include "qarith/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "qarith/errors.hpp"
#include "qarith/stdgates.hpp"

namespace qarith {

namespace {

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Expected final value of every qubit that is not garbage, or nullopt for
/// garbage qubits.
std::vector<std::optional<BitValue>> expected_bits(const ArithCircuit& arith,
                                                   const Values& inputs,
                                                   const Values& outputs) {
  const std::vector<BitValue> init = initial_values(arith.circuit, inputs);
  std::vector<std::optional<BitValue>> bits(init.begin(), init.end());
  for (const View& g : arith.garbage) {
    for (QubitId q : g.qubits) bits[q.index].reset();
  }
  for (const View& o : arith.outputs) {
    const std::uint64_t v = outputs.at(o.name);
    for (std::size_t i = 0; i < o.qubits.size(); ++i) {
      const bool bit = i < 64 && ((v >> i) & 1) != 0;
      bits[o.qubits[i].index] = bit ? BitValue::One : BitValue::Zero;
    }
  }
  return bits;
}

std::string check_outputs(const Values& expected, const Values& actual) {
  for (const auto& [name, want] : expected) {
    const auto it = actual.find(name);
    if (it == actual.end()) return "missing output " + name;
    if (it->second != want) {
      return name + " = " + std::to_string(it->second) + ", expected " +
             std::to_string(want);
    }
  }
  return {};
}

std::string check_boolean(const ArithCircuit& arith, const Values& inputs,
                          const Values& expected) {
  const BooleanState state = run_boolean(arith.circuit, inputs);
  Values actual;
  for (const View& o : arith.outputs) {
    try {
      actual[o.name] = read_register(state, o.qubits);
    } catch (const SimulationError& e) {
      return o.name + ": " + e.what();
    }
  }
  if (std::string r = check_outputs(expected, actual); !r.empty()) return r;
  const auto bits = expected_bits(arith, inputs, expected);
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] && *bits[q] != state.bits[q]) {
      return "qubit " + std::to_string(q) + " not restored";
    }
  }
  return {};
}

std::string check_sparse(const ArithCircuit& arith, const Circuit& lowered,
                         const Values& inputs, const Values& expected,
                         const VerifyOptions& options) {
  const SparseState state = run_sparse(lowered, inputs, options.sparse);
  Values actual;
  for (const View& o : arith.outputs) {
    try {
      actual[o.name] = read_register(state, o.qubits);
    } catch (const SimulationError& e) {
      return o.name + ": " + e.what();
    }
  }
  if (std::string r = check_outputs(expected, actual); !r.empty()) return r;

  // Garbage is read back classically and folded into the reference state.
  const auto bits = expected_bits(arith, inputs, expected);
  std::vector<BitValue> reference(bits.size(), BitValue::Zero);
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q]) reference[q] = *bits[q];
  }
  for (const View& g : arith.garbage) {
    for (QubitId q : g.qubits) {
      const QubitId one[1] = {q};
      try {
        reference[q.index] =
            read_register(state, one) != 0 ? BitValue::One : BitValue::Zero;
      } catch (const SimulationError&) {
        return "garbage " + g.name + " not classical";
      }
    }
  }
  const SparseState want = SparseState::product(reference, options.sparse);
  const double fidelity = std::abs(inner_product(state, want));
  if (fidelity < 1.0 - options.fidelity_tol) {
    return "state fidelity " + std::to_string(fidelity) +
           " (inputs or ancillae not restored)";
  }
  return {};
}

std::vector<Values> enumerate_cases(const ArithCircuit& arith,
                                    Sampling sampling,
                                    const VerifyOptions& options) {
  std::vector<Values> cases;
  if (sampling.exhaustive) {
    std::size_t bits = 0;
    for (const View& v : arith.inputs) bits += v.qubits.size();
    if (bits > options.max_exhaustive_bits) {
      throw DomainError("too many input bits for exhaustive verification: " +
                        std::to_string(bits));
    }
    const std::uint64_t total = std::uint64_t{1} << bits;
    cases.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Values in;
      std::size_t shift = 0;
      for (const View& v : arith.inputs) {
        in[v.name] = (idx >> shift) & low_mask(v.qubits.size());
        shift += v.qubits.size();
      }
      cases.push_back(std::move(in));
    }
    return cases;
  }
  std::mt19937_64 rng(sampling.seed);
  cases.reserve(sampling.samples);
  for (std::size_t s = 0; s < sampling.samples; ++s) {
    Values in;
    for (const View& v : arith.inputs) {
      std::uniform_int_distribution<std::uint64_t> dist(
          0, low_mask(v.qubits.size()));
      in[v.name] = dist(rng);
    }
    cases.push_back(std::move(in));
  }
  return cases;
}

}  // namespace

std::string check_case(const ArithCircuit& arith, Engine engine,
                       const Values& inputs, const VerifyOptions& options) {
  const Values expected = arith.expected(inputs);
  try {
    if (engine == Engine::Boolean) return check_boolean(arith, inputs, expected);
    return check_sparse(arith, lower(arith.circuit), inputs, expected, options);
  } catch (const SupportCapError&) {
    throw;
  } catch (const SimulationError& e) {
    return e.what();
  }
}

VerificationReport verify(const ArithCircuit& arith, Engine engine,
                          Sampling sampling, const VerifyOptions& options) {
  const std::vector<Values> cases = enumerate_cases(arith, sampling, options);
  std::optional<Circuit> lowered;
  if (engine == Engine::Sparse) lowered = lower(arith.circuit);

  std::vector<std::string> reasons(cases.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr fatal;
  std::mutex fatal_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      try {
        const Values expected = arith.expected(cases[i]);
        try {
          reasons[i] = engine == Engine::Boolean
                           ? check_boolean(arith, cases[i], expected)
                           : check_sparse(arith, *lowered, cases[i], expected,
                                          options);
        } catch (const SupportCapError&) {
          throw;
        } catch (const SimulationError& e) {
          reasons[i] = e.what();
        }
      } catch (...) {
        std::lock_guard lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
        next = cases.size();
        return;
      }
    }
  };

  std::size_t threads = options.threads != 0
                            ? options.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(cases.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (fatal) std::rethrow_exception(fatal);

  VerificationReport report;
  report.cases = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (reasons[i].empty()) continue;
    ++report.failures;
    report.failed.push_back({cases[i], reasons[i]});
  }
  return report;
}

VerificationReport verify_adder(const AdderCircuit& adder, Sampling sampling,
                                Engine engine, const VerifyOptions& options) {
  return verify(adder.arith, engine, sampling, options);
}

}  // namespace qarith
