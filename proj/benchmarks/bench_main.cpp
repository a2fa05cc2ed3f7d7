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

#include <benchmark/benchmark.h>

#include "qarith/adders.hpp"
#include "qarith/arith.hpp"
#include "qarith/bilinear.hpp"
#include "qarith/resources.hpp"
#include "qarith/stdgates.hpp"
#include "qarith/verify.hpp"

namespace {

using namespace qarith;

void BM_BuildOutOfPlace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_out_of_place(n, AdderMode::Proposed));
  }
}
BENCHMARK(BM_BuildOutOfPlace)->RangeMultiplier(4)->Range(4, 1024);

void BM_BuildInPlace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_in_place(n, AdderMode::Proposed));
  }
}
BENCHMARK(BM_BuildInPlace)->RangeMultiplier(4)->Range(4, 1024);

void BM_BuildMultiplier(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_multiplier(n));
}
BENCHMARK(BM_BuildMultiplier)->Arg(4)->Arg(8)->Arg(16);

void BM_Count(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AdderCircuit adder = build_in_place(n, AdderMode::Proposed);
  for (auto _ : state) benchmark::DoNotOptimize(count(adder.circuit()));
}
BENCHMARK(BM_Count)->Arg(16)->Arg(64)->Arg(256);

void BM_Lower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AdderCircuit adder = build_out_of_place(n, AdderMode::Proposed);
  for (auto _ : state) benchmark::DoNotOptimize(lower(adder.circuit()));
}
BENCHMARK(BM_Lower)->Arg(16)->Arg(64)->Arg(256);

void BM_VerifyBoolean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AdderCircuit adder = build_out_of_place(n, AdderMode::Proposed);
  VerifyOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_adder(adder, Sampling::random(64, 1), Engine::Boolean, opts));
  }
}
BENCHMARK(BM_VerifyBoolean)->Arg(8)->Arg(32)->Arg(128);

void BM_VerifySparse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AdderCircuit adder = build_out_of_place(n, AdderMode::Proposed);
  VerifyOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_adder(adder, Sampling::random(16, 1), Engine::Sparse, opts));
  }
}
BENCHMARK(BM_VerifySparse)->Arg(4)->Arg(6)->Arg(8);

void BM_BilinearGolden(benchmark::State& state) {
  BilinearParams p;
  p.n = 4;
  p.m = 8;
  p.color_width = 8;
  p.y_frac = 5;
  p.x_frac = 11;
  p.colors = {10, 200, 30, 90};
  for (auto _ : state) benchmark::DoNotOptimize(golden_bilinear(p));
}
BENCHMARK(BM_BilinearGolden);

}  // namespace

BENCHMARK_MAIN();
