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

#include <cstdint>

#include "palmfbm/fgn.hpp"
#include "palmfbm/point_process.hpp"

namespace {

using namespace palmfbm;

// Full configuration sampling, including sampler construction: 2N+1 points.
void BM_PerturbPalmLattice(benchmark::State& state) {
  const auto half_width = state.range(0) / 2;
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto config = perturb_palm_lattice(HurstIndex(0.25), half_width, StreamKey{1, i++});
    benchmark::DoNotOptimize(config);
  }
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PerturbPalmLattice)->RangeMultiplier(2)->Range(1 << 16, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);

// One FFT from a prebuilt sampler: two fGn vectors of length n.
void BM_FgnSamplePair(benchmark::State& state) {
  const CirculantFgnSampler sampler(HurstIndex(0.25), static_cast<std::size_t>(state.range(0)));
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto pair = sampler.sample_pair(StreamKey{2, i++});
    benchmark::DoNotOptimize(pair);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FgnSamplePair)->RangeMultiplier(2)->Range(1 << 16, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);

void BM_CirculantEigenvalues(benchmark::State& state) {
  for (auto _ : state) {
    auto eig = circulant_eigenvalues(HurstIndex(0.25), static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(eig);
  }
}
BENCHMARK(BM_CirculantEigenvalues)->RangeMultiplier(4)->Range(1 << 16, 1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace
