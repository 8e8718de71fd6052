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

#include "looplab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "looplab/bgw.hpp"
#include "looplab/constants.hpp"
#include "looplab/error.hpp"
#include "looplab/parallel.hpp"
#include "looplab/walk.hpp"

namespace looplab {

std::vector<Index> tree_bfs(const PlaneTree& t, Index source) {
  std::vector<Index> d(static_cast<std::size_t>(t.size()), kUnreached);
  std::vector<Index> queue;
  queue.reserve(static_cast<std::size_t>(t.size()));
  d[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index v = queue[head];
    const Index next = d[v] + 1;
    const Index p = t.parent(v);
    if (p != kNoParent && d[p] == kUnreached) {
      d[p] = next;
      queue.push_back(p);
    }
    for (Index c : t.children(v)) {
      if (d[c] == kUnreached) {
        d[c] = next;
        queue.push_back(c);
      }
    }
  }
  return d;
}

std::int64_t right_branching(const PlaneTree& t, Index v) {
  std::int64_t r = 0;
  for (Index c = v; t.parent(c) != kNoParent; c = t.parent(c)) {
    r += t.degree(t.parent(c)) - t.rank(c);
  }
  return r;
}

namespace {

struct SpinalDraw {
  std::int64_t r = 0;
  std::int64_t w = 0;
  std::int64_t hcirc = 0;
  double coupling = 0.0;
};

SpinalDraw spinal_draw(const PlaneTree& t, Index u, double c, double bn) {
  SpinalDraw s;
  const CodingPaths p = coding_paths(t);
  s.w = p.lukasiewicz[u];
  s.r = right_branching(t, u);
  const LoopGraph g = build_loop(t);
  s.hcirc = dist(g, 0, g.vertex_of[u]);
  s.coupling = std::fabs(static_cast<double>(s.hcirc) -
                         c * static_cast<double>(s.w)) / bn;
  return s;
}

}  // namespace

SpinalStats spinal_ratio_stats(const OffspringLaw& law, std::int64_t n,
                               std::int64_t replicates, RandomSource src,
                               int threads) {
  const double c = c_mu(law);
  const double bn = ScalingSequence(law)(n);
  const auto draws = run_replicates<SpinalDraw>(
      replicates, src, threads, [&](std::int64_t, RandomSource& s) {
        const PlaneTree t = sample_bgw_exact_n(law, n, s);
        const auto u = static_cast<Index>(s.below(static_cast<std::uint64_t>(n)));
        return spinal_draw(t, u, c, bn);
      });
  SpinalStats out;
  std::vector<double> ratios;
  for (const SpinalDraw& d : draws) {
    if (d.r != d.w) ++out.r_mismatches;
    out.coupling.push_back(d.coupling);
    if (d.r == 0) {
      ++out.zero_r;
    } else {
      ratios.push_back(static_cast<double>(d.hcirc) / static_cast<double>(d.r));
    }
  }
  out.ratios = EmpiricalLaw::from_samples(std::move(ratios));
  return out;
}

double profile_coupling_stat(const OffspringLaw& law, std::int64_t n,
                             RandomSource& src) {
  const PlaneTree t = sample_bgw_exact_n(law, n, src);
  const auto u = static_cast<Index>(src.below(static_cast<std::uint64_t>(n)));
  return spinal_draw(t, u, c_mu(law), ScalingSequence(law)(n)).coupling;
}

CondensationDraw condensation_draw(const PlaneTree& t, std::int64_t n) {
  CondensationDraw d;
  d.size = t.size();
  const double scale = static_cast<double>(n);
  Index star = 0;
  for (Index v = 1; v < t.size(); ++v) {
    if (t.degree(v) > t.degree(star)) star = v;
  }
  d.maxdeg = t.degree(star) / scale;
  const std::vector<Index> sub = t.subtree_sizes();
  Index second = t.size() - sub[star];
  for (Index c : t.children(star)) second = std::max(second, sub[c]);
  d.second = second / scale;
  if (t.degree(star) == 0) return d;

  const LoopGraph g = build_loop(t);
  std::vector<Index> dist(static_cast<std::size_t>(g.vertex_count), kUnreached);
  std::vector<Index> queue;
  queue.reserve(dist.size());
  auto seed = [&](Index v) {
    dist[g.vertex_of[v]] = 0;
    queue.push_back(g.vertex_of[v]);
  };
  seed(star);
  for (Index c : t.children(star)) seed(c);
  Index delta = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index v = queue[head];
    delta = std::max(delta, dist[v]);
    for (Index w : g.adjacent(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  d.gh_bound = 0.5 * (2.0 * delta / scale + 1.5 / scale);
  return d;
}

CondensationStats condensation_stats(const OffspringLaw& law, std::int64_t n,
                                     std::int64_t replicates, RandomSource src,
                                     int threads, const SurvivalTable* table) {
  std::optional<SurvivalTable> own;
  AtLeastOptions opts;
  if (n >= 2) {
    if (table == nullptr) {
      own.emplace(WalkLaw::from_offspring(law), n - 1);
      table = &*own;
    }
    opts.method = AtLeastMethod::kSurvivalTable;
    opts.table = table;
  }
  CondensationStats out;
  out.draws = run_replicates<CondensationDraw>(
      replicates, src, threads, [&](std::int64_t, RandomSource& s) {
        return condensation_draw(sample_bgw_at_least_n(law, n, s, opts), n);
      });
  std::vector<double> a, b, c;
  for (const CondensationDraw& d : out.draws) {
    a.push_back(d.maxdeg);
    b.push_back(d.second);
    c.push_back(d.gh_bound);
  }
  out.maxdeg = EmpiricalLaw::from_samples(std::move(a));
  out.second = EmpiricalLaw::from_samples(std::move(b));
  out.gh_bound = EmpiricalLaw::from_samples(std::move(c));
  return out;
}

std::vector<double> pair_distortions(const PlaneTree& t,
                                     std::span<const VertexPair> pairs,
                                     double c, double bn, std::int64_t n) {
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pairs[a].first < pairs[b].first;
  });
  const LoopGraph g = build_loop(t);
  const double tree_scale = c * bn / static_cast<double>(n);
  std::vector<double> out(pairs.size());
  std::vector<Index> dl, queue, dt;
  Index current = kUnreached;
  for (std::size_t k : order) {
    const auto [a, b] = pairs[k];
    if (a != current) {
      bfs(g, g.vertex_of[a], dl, queue);
      dt = tree_bfs(t, a);
      current = a;
    }
    out[k] = std::fabs(dl[g.vertex_of[b]] / bn - tree_scale * dt[b]);
  }
  return out;
}

DistortionSample loop_vs_scaled_tree_distortion(const OffspringLaw& law,
                                                std::int64_t n,
                                                std::int64_t pair_budget,
                                                RandomSource& src,
                                                std::int64_t sources) {
  const double c = c_mu(law);
  const double bn = ScalingSequence(law)(n);
  const PlaneTree t = sample_bgw_exact_n(law, n, src);
  const std::int64_t s = std::clamp<std::int64_t>(sources, 1, n);
  const std::int64_t per = std::max<std::int64_t>(1, pair_budget / s);
  DistortionSample out;
  const LoopGraph g = build_loop(t);
  std::vector<Index> dl, queue;
  for (std::int64_t k = 0; k < s; ++k) {
    const auto a = static_cast<Index>(src.below(static_cast<std::uint64_t>(n)));
    bfs(g, g.vertex_of[a], dl, queue);
    const Index ecc = *std::max_element(dl.begin(), dl.end());
    out.loop_diameter = std::max(out.loop_diameter, ecc / bn);
    for (std::int64_t j = 0; j < per; ++j) {
      out.pairs.emplace_back(
          a, static_cast<Index>(src.below(static_cast<std::uint64_t>(n))));
    }
  }
  out.values = pair_distortions(t, out.pairs, c, bn, n);
  return out;
}

HeightLaw height_law_check(const OffspringLaw& law, std::int64_t n,
                           std::int64_t replicates, RandomSource src,
                           int threads) {
  const double scale = ScalingSequence(law)(n) / static_cast<double>(n);
  HeightLaw out;
  out.samples = run_replicates<double>(
      replicates, src, threads, [&](std::int64_t, RandomSource& s) {
        const PlaneTree t = sample_bgw_exact_n(law, n, s);
        auto v = static_cast<Index>(s.below(static_cast<std::uint64_t>(n)));
        std::int64_t h = 0;
        for (; t.parent(v) != kNoParent; v = t.parent(v)) ++h;
        return static_cast<double>(h) * scale;
      });
  out.ks = ks_one_sample(out.samples,
                         [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x * x); });
  return out;
}

std::uint64_t trunk_cell(Index x, Index u, std::int64_t x_cap) {
  const std::int64_t xb = std::min<std::int64_t>(x, x_cap);
  const std::uint64_t pos = u == 1 ? 0 : (u == x ? 1 : 2);
  return static_cast<std::uint64_t>(xb) * 3 + pos;
}

double trunk_star_cell_probability(const OffspringLaw& law, std::uint64_t cell,
                                   std::int64_t x_cap) {
  const auto xb = static_cast<std::int64_t>(cell / 3);
  const std::uint64_t pos = cell % 3;
  const double m = law.mean();
  if (xb < 1 || xb > x_cap) return 0.0;
  if (xb < x_cap) {
    const double p = law.pmf(xb) / m;  // mu*(x) / x
    if (pos == 0) return p;
    if (pos == 1) return xb >= 2 ? p : 0.0;
    return xb >= 3 ? static_cast<double>(xb - 2) * p : 0.0;
  }
  const double first = law.tail(x_cap) / m;
  const double last = law.tail(std::max<std::int64_t>(x_cap, 2)) / m;
  if (pos == 0) return first;
  if (pos == 1) return last;
  double below = 0.0;
  for (std::int64_t x = 1; x < x_cap; ++x) below += static_cast<double>(x) * law.pmf(x);
  return std::max(0.0, (m - below) / m - first - last);
}

TrunkTv trunk_tv_check(const OffspringLaw& law, std::int64_t n, double t,
                       const TrunkBins& bins, std::int64_t trees,
                       RandomSource src, int threads) {
  const double bn = ScalingSequence(law)(n);
  TrunkTv out;
  // Guard against B_n landing just above an exact divisor of t n.
  out.height = static_cast<std::int64_t>(
      std::floor(t * static_cast<double>(n) / bn * (1.0 + 1e-12)));
  if (out.height < 1) {
    throw Error(ErrorKind::kInvalidArgument, "target height is 0");
  }
  const std::int64_t window = std::min(bins.window, out.height);
  const std::uint64_t base = 3 * static_cast<std::uint64_t>(bins.x_cap + 1);
  if (window < 1 || std::pow(static_cast<double>(base), window) > 1.8e19) {
    throw Error(ErrorKind::kTooLarge, "trunk window too wide");
  }
  using Cells = std::vector<std::pair<std::uint64_t, double>>;
  const auto per_tree = run_replicates<Cells>(
      trees, src, threads, [&](std::int64_t, RandomSource& s) {
        const PlaneTree tree = sample_bgw_exact_n(law, n, s);
        const std::vector<Index> depth = tree.depths();
        std::vector<std::uint64_t> keys;
        for (Index v = 0; v < tree.size(); ++v) {
          if (depth[v] != out.height) continue;
          std::uint64_t key = 0, mult = 1;
          Index c = v;
          for (std::int64_t level = 0; level < window; ++level) {
            const Index p = tree.parent(c);
            key += mult * trunk_cell(tree.degree(p), tree.rank(c), bins.x_cap);
            mult *= base;
            c = p;
          }
          keys.push_back(key);
        }
        Cells cells;
        if (keys.empty()) return cells;
        std::sort(keys.begin(), keys.end());
        const double w = 1.0 / static_cast<double>(keys.size());
        for (std::uint64_t k : keys) {
          if (!cells.empty() && cells.back().first == k) {
            cells.back().second += w;
          } else {
            cells.emplace_back(k, w);
          }
        }
        return cells;
      });
  Cells all;
  for (const Cells& c : per_tree) {
    if (c.empty()) {
      ++out.excluded;
    } else {
      ++out.used;
      all.insert(all.end(), c.begin(), c.end());
    }
  }
  if (out.used == 0) {
    throw Error(ErrorKind::kNoVertexAtHeight, "no tree reached the height");
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  auto star = [&](std::uint64_t key) {
    double p = 1.0;
    for (std::int64_t level = 0; level < window; ++level) {
      p *= trunk_star_cell_probability(law, key % base, bins.x_cap);
      key /= base;
    }
    return p;
  };
  const double used = static_cast<double>(out.used);
  double diff = 0.0, covered = 0.0;
  for (std::size_t i = 0; i < all.size();) {
    double w = 0.0;
    std::size_t j = i;
    for (; j < all.size() && all[j].first == all[i].first; ++j) w += all[j].second;
    const double p = star(all[i].first);
    diff += std::fabs(w / used - p);
    covered += p;
    i = j;
  }
  out.tv = 0.5 * (diff + std::max(0.0, 1.0 - covered));
  return out;
}

}  // namespace looplab
