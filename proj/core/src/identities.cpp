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

#include "looplab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "looplab/bgw.hpp"
#include "looplab/constants.hpp"
#include "looplab/convolution.hpp"
#include "looplab/error.hpp"

namespace looplab {

IdentityCheck kemperman_check(const OffspringLaw& law, std::int64_t n) {
  IdentityCheck c;
  for (const WeightedTree& t : enumerate_trees(law, n)) c.lhs += t.weight;
  c.rhs = phi(law, n).at(1) / static_cast<double>(n);
  return c;
}

IdentityCheck forest_kemperman_check(const OffspringLaw& law, std::int64_t k,
                                     std::int64_t n) {
  IdentityCheck c;
  c.lhs = enumerate_forests(law, k, n).weight;
  c.rhs = static_cast<double>(k) / static_cast<double>(n) * phi(law, n).at(k);
  return c;
}

namespace {

struct SkeletonWalker {
  std::vector<std::int64_t> atoms;  // positive support
  std::vector<double> mass;
  std::int64_t n = 0;
  std::vector<Phi> phis;  // phis[m] = law of W_m
  double denom = 0.0;     // phi_n(1)
  std::map<TrunkSkeleton, double>* out = nullptr;
  TrunkSkeleton cur;

  // Spine levels filled so far: cur.h(); extra = sum (x_i - 1).
  void run(std::int64_t h, std::int64_t extra, double weight) {
    if (static_cast<std::int64_t>(cur.h()) == h) {
      const std::int64_t leaves = extra + 1;
      const std::int64_t rest = n - h;
      const double f = phis[rest].at(leaves);
      if (f == 0.0) return;
      (*out)[cur] += weight * static_cast<double>(leaves) * f /
                     (static_cast<double>(rest) * denom);
      return;
    }
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const std::int64_t x = atoms[a];
      if (extra + x - 1 > n - h - 1) break;
      cur.child_counts.push_back(static_cast<Index>(x));
      cur.spine_pos.push_back(0);
      for (std::int64_t u = 1; u <= x; ++u) {
        cur.spine_pos.back() = static_cast<Index>(u);
        run(h, extra + x - 1, weight * mass[a]);
      }
      cur.child_counts.pop_back();
      cur.spine_pos.pop_back();
    }
  }
};

}  // namespace

BiasCheck bias_identity_check(const OffspringLaw& law, std::int64_t n) {
  if (n > 9) {
    throw Error(ErrorKind::kTooLargeToEnumerate,
                "bias identity limited to n <= 9");
  }
  // Tree side.
  const std::vector<WeightedTree> trees = enumerate_trees(law, n);
  double z = 0.0;
  for (const auto& t : trees) z += t.weight;
  if (z == 0.0) {
    throw Error(ErrorKind::kInfeasibleSize, "no tree of this size");
  }
  std::map<TrunkSkeleton, double> lhs;
  for (const auto& t : trees) {
    const double w = t.weight / (z * static_cast<double>(n));
    lhs[TrunkSkeleton{}] += w;
    for (Index v = 1; v < t.tree.size(); ++v) lhs[trunk_of(t.tree, v)] += w;
  }
  // Skeleton side: i.i.d. spine counts with weight mu(x) each (the size
  // biasing x mu(x) cancels against the uniform 1/x spine position).
  std::map<TrunkSkeleton, double> rhs;
  SkeletonWalker s;
  s.n = n;
  for (std::int64_t k = 1; k <= std::min<std::int64_t>(law.support_max(), n);
       ++k) {
    if (law.pmf(k) > 0.0) {
      s.atoms.push_back(k);
      s.mass.push_back(law.pmf(k));
    }
  }
  for (std::int64_t m = 0; m <= n; ++m) s.phis.push_back(phi(law, m));
  s.denom = s.phis[n].at(1);
  s.out = &rhs;
  for (std::int64_t h = 0; h < n; ++h) s.run(h, 0, 1.0);

  BiasCheck c;
  c.root_mass = lhs[TrunkSkeleton{}];
  std::map<TrunkSkeleton, double> all = lhs;
  for (const auto& [k, v] : rhs) all[k];
  for (const auto& [k, unused] : all) {
    const auto a = lhs.find(k);
    const auto b = rhs.find(k);
    const double x = a == lhs.end() ? 0.0 : a->second;
    const double y = b == rhs.end() ? 0.0 : b->second;
    c.max_discrepancy = std::max(c.max_discrepancy, std::fabs(x - y));
  }
  c.skeletons = static_cast<std::int64_t>(all.size());
  return c;
}

double llt_check(const OffspringLaw& law, std::int64_t n) {
  const double b = ScalingSequence(law)(n);
  const Phi f = phi(law, n);
  const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  double sup = 0.0;
  for (std::int64_t k = f.min_j() - 1; k <= f.max_j() + 1; ++k) {
    const double kk = static_cast<double>(k);
    const double g = norm * std::exp(-kk * kk / (4.0 * b * b));
    sup = std::max(sup, std::fabs(b * f.at(k) - g));
  }
  return sup;
}

}  // namespace looplab
