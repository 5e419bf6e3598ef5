// Copyright 2026 The mwpsas Authors
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

#include "mwpsas/approx.hpp"
#include "mwpsas/exact.hpp"
#include "mwpsas/generator.hpp"
#include "mwpsas/io.hpp"

namespace {

using namespace mwpsas;

Instance bench_instance(std::uint32_t n, std::uint32_t m_set) {
  return generate_instance(/*seed=*/42, n, m_set, /*machines=*/std::max(2u, n / 8),
                           /*max_weight=*/9, Variant::general);
}

void BM_evaluate_objective(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Instance inst = bench_instance(n, n / 2);
  const ApproxResult res = approximate_partition(inst, strategy_whole(inst));
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_objective(inst, res.partition));
}
BENCHMARK(BM_evaluate_objective)->Arg(64)->Arg(512)->Arg(4096);

void BM_approx_whole(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Instance inst = bench_instance(n, n / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(approximate_partition(inst, strategy_whole(inst)));
}
BENCHMARK(BM_approx_whole)->Arg(64)->Arg(512)->Arg(4096);

void BM_approx_singletons(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Instance inst = bench_instance(n, n / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(approximate_partition(inst, strategy_singletons(inst)));
}
BENCHMARK(BM_approx_singletons)->Arg(64)->Arg(512)->Arg(4096);

void BM_exact_solve(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Instance inst = generate_instance(7, n, 6, 3, 5, Variant::general);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_solve(inst));
}
BENCHMARK(BM_exact_solve)->Arg(8)->Arg(10)->Arg(12);

void BM_parse_instance(benchmark::State& state) {
  const Instance inst = bench_instance(1024, 512);
  const std::string text = write_instance(inst);
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_instance(text));
}
BENCHMARK(BM_parse_instance);

}  // namespace

BENCHMARK_MAIN();
