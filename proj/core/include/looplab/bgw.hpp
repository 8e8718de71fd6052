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

#ifndef LOOPLAB_BGW_HPP_
#define LOOPLAB_BGW_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "looplab/discrete_law.hpp"
#include "looplab/offspring_law.hpp"
#include "looplab/plane_tree.hpp"
#include "looplab/random.hpp"

namespace looplab {

class SurvivalTable;

// Unconditioned BGW tree. Throws kTreeTooLarge past `cap` vertices.
PlaneTree sample_bgw(const OffspringLaw& law, RandomSource& src,
                     std::int64_t cap = kMaxVertices);

// Whether some tree with n vertices has all child counts in the support.
bool size_feasible(const OffspringLaw& law, std::int64_t n);
// Smallest feasible size >= n; throws kInfeasibleSize after 1000 misses.
std::int64_t nearest_feasible_size(const OffspringLaw& law, std::int64_t n);

// Index s in [0, n) such that the rotation starting at s of increments with
// sum -1 first hits -1 at its last step.
std::size_t first_passage_rotation(std::span<const std::int64_t> increments);
bool is_first_passage(std::span<const Index> degrees);

struct ExactSizeOptions {
  std::int64_t max_attempts = 1'000'000'000;
  std::int64_t* attempts = nullptr;  // optional out
};

// BGW conditioned on |T| = n: child counts conditioned on summing to n - 1,
// then the cyclic rotation that makes the path first-passage.
PlaneTree sample_bgw_exact_n(const OffspringLaw& law, std::int64_t n,
                             RandomSource& src,
                             const ExactSizeOptions& opts = {});

enum class AtLeastMethod { kRejection, kSurvivalTable };

struct AtLeastOptions {
  AtLeastMethod method = AtLeastMethod::kRejection;
  // Built from WalkLaw::from_offspring(law) with max_steps >= n - 1.
  const SurvivalTable* table = nullptr;
  std::int64_t max_attempts = 100'000'000;
  std::int64_t cap = kMaxVertices;
  std::int64_t* attempts = nullptr;
};

// BGW conditioned on |T| >= n.
PlaneTree sample_bgw_at_least_n(const OffspringLaw& law, std::int64_t n,
                                RandomSource& src,
                                const AtLeastOptions& opts = {});

// Trunk*_h: spine child counts i.i.d. from the size-biased law, spine child
// uniform among them.
class TrunkStarSampler {
 public:
  explicit TrunkStarSampler(const OffspringLaw& law);
  const DiscreteLaw& size_biased_law() const { return star_; }
  TrunkSkeleton sample(std::int64_t h, RandomSource& src) const;

 private:
  DiscreteLaw star_;
};

TrunkSkeleton sample_trunk_star(const OffspringLaw& law, std::int64_t h,
                                RandomSource& src);

// gamma U^{-1/beta}: P(J >= x) = (gamma / x)^beta for x >= gamma.
double sample_J(double gamma, double beta, RandomSource& src);
// sqrt(-log U): density 2x exp(-x^2) on x >= 0.
double sample_R(RandomSource& src);

struct WeightedTree {
  PlaneTree tree;
  double weight = 0.0;
};

inline constexpr std::int64_t kMaxEnumerate = 12;

// All trees with n vertices and their BGW weights, in lexicographic order
// of degree sequences. Finite-support laws, n <= 12.
std::vector<WeightedTree> enumerate_trees(const OffspringLaw& law,
                                          std::int64_t n);

struct ForestWeight {
  double weight = 0.0;  // sum of products of mu over all vertices
  std::int64_t count = 0;
};

// Ordered forests of k trees with n vertices in total.
ForestWeight enumerate_forests(const OffspringLaw& law, std::int64_t k,
                               std::int64_t n);

}  // namespace looplab

#endif  // LOOPLAB_BGW_HPP_
