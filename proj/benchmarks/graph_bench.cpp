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

#include "looplab/bgw.hpp"
#include "looplab/loop_graph.hpp"
#include "looplab/random.hpp"

namespace looplab {
namespace {

PlaneTree fixture(std::int64_t n) {
  RandomSource src(4, static_cast<std::uint64_t>(n));
  return sample_bgw_exact_n(OffspringLaw::preset("geometric"), n, src);
}

void BM_BuildLoop(benchmark::State& state) {
  const PlaneTree t = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_loop(t).vertex_count);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildLoop)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_BuildLoopBar(benchmark::State& state) {
  const PlaneTree t = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_loopbar(t).vertex_count);
}
BENCHMARK(BM_BuildLoopBar)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_Bfs(benchmark::State& state) {
  const PlaneTree t = fixture(state.range(0));
  const LoopGraph g = build_loop(t);
  std::vector<Index> dist, queue;
  Index s = 0;
  for (auto _ : state) {
    bfs(g, s, dist, queue);
    s = (s + 7919) % g.vertex_count;
    benchmark::DoNotOptimize(dist.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Bfs)->Range(1000, 1000000)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace looplab
