// Copyright 2026 The palmfbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "palmfbm/spectrum.hpp"

namespace {

using namespace palmfbm;

// Lattice sum at h = 0.25; the truncation index grows like t^{-1/h}.
void BM_StructureFactorSum(benchmark::State& state) {
  const double t = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structure_factor_sum(HurstIndex(0.25), t));
  state.counters["terms"] = static_cast<double>(structure_factor_sum(HurstIndex(0.25), t).terms);
}
BENCHMARK(BM_StructureFactorSum)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ContinuumStructureFactor(benchmark::State& state) {
  const double t = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(continuum_structure_factor(HurstIndex(0.25), t));
}
BENCHMARK(BM_ContinuumStructureFactor)->Arg(1)->Arg(10)->Arg(1000)->Unit(benchmark::kMillisecond);

// Empirical estimator over the dual grid in [0.5, 3] for M configurations
// of 2N+1 = 4097 points.
void BM_EmpiricalStructureFactor(benchmark::State& state) {
  const std::int64_t half_width = 1 << 11;
  const auto t = dual_grid(static_cast<double>(half_width), 0.5, 3.0);
  EmpiricalOptions opt;
  opt.window_length = static_cast<double>(half_width);
  const auto realizations = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto curve = empirical_structure_factor_lattice(HurstIndex(0.25), half_width, realizations,
                                                    StreamKey{3, 0}, t, opt);
    benchmark::DoNotOptimize(curve);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmpiricalStructureFactor)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
