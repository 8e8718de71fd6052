// Copyright 2026 The looplab Authors.
// SPDX-License-Identifier: Apache-2.0
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

#include "looplab/alias_table.hpp"
#include "looplab/bgw.hpp"
#include "looplab/offspring_law.hpp"
#include "looplab/random.hpp"

namespace looplab {
namespace {

void BM_AliasSample(benchmark::State& state) {
  std::vector<double> w(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = 1.0 / static_cast<double>(i + 1);
  const AliasTable table(w);
  RandomSource src(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(table.sample(src));
}
BENCHMARK(BM_AliasSample)->Range(8, 1 << 16);

void BM_ExactSize(benchmark::State& state, const char* law_name) {
  const OffspringLaw law = OffspringLaw::preset(law_name);
  const std::int64_t n = nearest_feasible_size(law, state.range(0));
  RandomSource src(2, 0);
  for (auto _ : state) {
    PlaneTree t = sample_bgw_exact_n(law, n, src);
    benchmark::DoNotOptimize(t.size());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK_CAPTURE(BM_ExactSize, geometric, "geometric")->Range(1000, 100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExactSize, binary, "binary")->Range(1000, 100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExactSize, critical_3pt, "critical-3pt")->Range(1000, 10000)->Unit(benchmark::kMillisecond);

void BM_TrunkStar(benchmark::State& state) {
  const TrunkStarSampler s(OffspringLaw::preset("geometric"));
  RandomSource src(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(state.range(0), src));
}
BENCHMARK(BM_TrunkStar)->Range(16, 4096);

}  // namespace
}  // namespace looplab

BENCHMARK_MAIN();
