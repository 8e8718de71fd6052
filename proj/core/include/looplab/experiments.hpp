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

#ifndef LOOPLAB_EXPERIMENTS_HPP_
#define LOOPLAB_EXPERIMENTS_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "looplab/loop_graph.hpp"
#include "looplab/offspring_law.hpp"
#include "looplab/plane_tree.hpp"
#include "looplab/random.hpp"
#include "looplab/stats.hpp"

namespace looplab {

class SurvivalTable;

// Distances from `source` in the tree graph.
std::vector<Index> tree_bfs(const PlaneTree& t, Index source);

// Right-branching children of the strict ancestors of v, read off the trunk.
std::int64_t right_branching(const PlaneTree& t, Index v);

struct SpinalStats {
  EmpiricalLaw ratios;            // d°(root, V) / R(V) over draws with R > 0
  std::int64_t zero_r = 0;        // draws with R(V) = 0
  std::int64_t r_mismatches = 0;  // draws where R(V) != W at V's index
  std::vector<double> coupling;   // |H°_V - c W_V| / B_n, one per draw
};

// One tree T_n and one uniform vertex per replicate.
SpinalStats spinal_ratio_stats(const OffspringLaw& law, std::int64_t n,
                               std::int64_t replicates, RandomSource src,
                               int threads = 1);

// |H°_U - c_mu W_U| / B_n for one tree and a uniform U.
double profile_coupling_stat(const OffspringLaw& law, std::int64_t n,
                             RandomSource& src);

struct CondensationDraw {
  double maxdeg = 0.0;    // largest child count / n
  double second = 0.0;    // largest component of T minus v*, over n
  double gh_bound = 0.0;  // GH upper bound between Loop(T)/n and j S^1
  std::int64_t size = 0;
};

// Projection onto the largest cycle: a correspondence with distortion
// 2 delta / n + 3 / (2 n), delta the largest distance to the cycle.
CondensationDraw condensation_draw(const PlaneTree& t, std::int64_t n);

struct CondensationStats {
  EmpiricalLaw maxdeg;
  EmpiricalLaw second;
  EmpiricalLaw gh_bound;
  std::vector<CondensationDraw> draws;
};

// Trees conditioned on |T| >= n. Builds its own survival table when
// `table` is null.
CondensationStats condensation_stats(const OffspringLaw& law, std::int64_t n,
                                     std::int64_t replicates, RandomSource src,
                                     int threads = 1,
                                     const SurvivalTable* table = nullptr);

using VertexPair = std::pair<Index, Index>;

// |d°(u,v) / B_n - c (B_n / n) d(u,v)| for each pair.
std::vector<double> pair_distortions(const PlaneTree& t,
                                     std::span<const VertexPair> pairs,
                                     double c, double bn, std::int64_t n);

struct DistortionSample {
  std::vector<double> values;
  std::vector<VertexPair> pairs;
  double loop_diameter = 0.0;  // largest sampled Loop distance / B_n
};

// `sources` uniform sources, pair_budget / sources uniform targets each.
DistortionSample loop_vs_scaled_tree_distortion(const OffspringLaw& law,
                                                std::int64_t n,
                                                std::int64_t pair_budget,
                                                RandomSource& src,
                                                std::int64_t sources = 64);

struct HeightLaw {
  std::vector<double> samples;  // |V| B_n / n
  double ks = 0.0;              // against P(R <= x) = 1 - exp(-x^2)
};

HeightLaw height_law_check(const OffspringLaw& law, std::int64_t n,
                           std::int64_t replicates, RandomSource src,
                           int threads = 1);

struct TrunkBins {
  std::int64_t window = 2;  // spine levels nearest the marked vertex
  std::int64_t x_cap = 3;   // child counts >= x_cap share a bin
};

struct TrunkTv {
  double tv = 0.0;
  std::int64_t height = 0;
  std::int64_t used = 0;
  std::int64_t excluded = 0;  // trees without a vertex at the height
};

// Per level (min(x, x_cap), first / last / middle spine position).
std::uint64_t trunk_cell(Index x, Index u, std::int64_t x_cap);
// Probability of one level's cell under the size-biased spine law.
double trunk_star_cell_probability(const OffspringLaw& law, std::uint64_t cell,
                                   std::int64_t x_cap);

// TV between the binned trunk of V^t (uniform among vertices at height
// floor(t n / B_n), averaged over all of them in each tree) and Trunk*.
TrunkTv trunk_tv_check(const OffspringLaw& law, std::int64_t n, double t,
                       const TrunkBins& bins, std::int64_t trees,
                       RandomSource src, int threads = 1);

}  // namespace looplab

#endif  // LOOPLAB_EXPERIMENTS_HPP_
