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

#include "looplab/offspring_law.hpp"
#include "looplab/random.hpp"
#include "looplab/walk.hpp"

namespace looplab {
namespace {

const WalkLaw& heavy() {
  static const WalkLaw w = WalkLaw::from_offspring(OffspringLaw::preset("heavy"));
  return w;
}

void BM_SurvivalTableBuild(benchmark::State& state) {
  for (auto _ : state) {
    SurvivalTable t(heavy(), state.range(0));
    benchmark::DoNotOptimize(t.survival(state.range(0), 0));
  }
}
BENCHMARK(BM_SurvivalTableBuild)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond);

void BM_ConditionedWalk(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const SurvivalTable table(heavy(), n);
  ConditionedWalkOptions opts;
  opts.method = ConditioningMethod::kSurvivalTable;
  opts.table = &table;
  RandomSource src(5, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_conditioned_walk(heavy(), n, n, src, opts).zeta);
  }
}
BENCHMARK(BM_ConditionedWalk)->Arg(200)->Arg(800)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_CoupledZ(benchmark::State& state) {
  const SurvivalTable table(heavy(), 2000);
  const ZetaTail tail = zeta_tail_from_survival(table, 2001);
  const CoupledZSampler z(heavy(), &tail, &table);
  RandomSource src(6, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(z.sample(state.range(0), state.range(0), src).zeta);
  }
}
BENCHMARK(BM_CoupledZ)->Arg(200)->Arg(800)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace looplab
