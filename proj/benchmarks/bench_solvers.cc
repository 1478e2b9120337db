// Copyright 2026 The sigev Authors
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

#include "sigev/analytic.h"
#include "sigev/numeric.h"
#include "sigev/sweep.h"

namespace sigev {
namespace {

GameSpec Intermediate(double p0) {
  return {HoneypotBenchmarkPayoffs(), Prior(p0),
          DetectorModel::Symmetric(0.8, 0.5)};
}

void BM_EnumeratePure(benchmark::State& state) {
  const GameSpec spec = Intermediate(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(EnumeratePurePbe(spec));
}
BENCHMARK(BM_EnumeratePure);

void BM_SolveMixed(benchmark::State& state) {
  const GameSpec spec = Intermediate(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(SolveMixedPbe(spec));
}
BENCHMARK(BM_SolveMixed)->Unit(benchmark::kMillisecond);

void BM_SweepNoDetector(benchmark::State& state) {
  const auto grid = UniformGrid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SweepPrior(HoneypotBenchmarkPayoffs(), std::nullopt, grid));
  }
}
BENCHMARK(BM_SweepNoDetector)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_SweepIntermediate(benchmark::State& state) {
  const auto grid = UniformGrid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SweepPrior(HoneypotBenchmarkPayoffs(),
                                        DetectorModel::Symmetric(0.8, 0.5),
                                        grid));
  }
}
BENCHMARK(BM_SweepIntermediate)->Arg(21)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sigev

BENCHMARK_MAIN();
