/**
 * Copyright 2026 The qtc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "qtc/engine.hpp"
#include "qtc/linalg.hpp"
#include "qtc/scenarios.hpp"
#include "support/test_support.hpp"

using namespace qtc;

namespace {

EventSpec random_event(std::size_t n) {
  testing::Generator gen(1000 + n);
  const std::size_t m = n + 2;
  return {gen.unitary(m), gen.distinct_modes(n, m), gen.occupation(m, static_cast<int>(n)),
          gram_from_positions({gen.positions(n, 1.0), 1.0}), Statistics::Boson};
}

void BM_OrderContributions(benchmark::State& state, Execution exec) {
  const auto spec = random_event(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(order_contributions(spec, exec));
}

void BM_FullDistribution(benchmark::State& state, Execution exec) {
  testing::Generator gen(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t m = 8;
  const auto u = gen.unitary(m);
  const auto input = gen.distinct_modes(n, m);
  const auto gram = gram_from_positions({gen.positions(n, 1.0), 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(full_distribution(u, input, gram, Statistics::Fermion, exec));
}

void BM_FermionScan(benchmark::State& state, Execution exec) {
  const auto xs = linspace(0.0, 5.0, 51);
  const auto events = single_occupancy_events(9, 3);
  for (auto _ : state) benchmark::DoNotOptimize(fermion_fourier_scan(xs, events, 1.0, exec));
}

void BM_PermanentRyser(benchmark::State& state) {
  testing::Generator gen(3);
  const auto a = gen.complex_matrix(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}

void BM_PermanentNaive(benchmark::State& state) {
  testing::Generator gen(3);
  const auto a = gen.complex_matrix(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(testing::permanent_naive(a));
}

}  // namespace

BENCHMARK_CAPTURE(BM_OrderContributions, serial, Execution::Serial)->DenseRange(3, 6);
BENCHMARK_CAPTURE(BM_OrderContributions, parallel, Execution::Parallel)->DenseRange(3, 6);
BENCHMARK_CAPTURE(BM_FullDistribution, serial, Execution::Serial)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_FullDistribution, parallel, Execution::Parallel)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_FermionScan, serial, Execution::Serial);
BENCHMARK_CAPTURE(BM_FermionScan, parallel, Execution::Parallel);
BENCHMARK(BM_PermanentRyser)->DenseRange(4, 10, 2);
BENCHMARK(BM_PermanentNaive)->DenseRange(4, 10, 2);

BENCHMARK_MAIN();
