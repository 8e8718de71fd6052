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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "looplab/bgw.hpp"
#include "looplab/loop_graph.hpp"
#include "oracles.hpp"

namespace looplab {
namespace {

using ::testing::ElementsAre;

PlaneTree tau3() { return PlaneTree::from_degree_sequence({2, 1, 0, 0}); }

PlaneTree star(int k) {
  std::vector<Index> s(k + 1, 0);
  s[0] = k;
  return PlaneTree::from_degree_sequence(s);
}

std::vector<int> as_int(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

TEST(Loop, SingleVertex) {
  for (const LoopGraph& g : {build_loop(PlaneTree()), build_loopbar(PlaneTree())}) {
    EXPECT_EQ(g.vertex_count, 1);
    EXPECT_TRUE(g.edges.empty());
    EXPECT_THAT(as_int(profile_hcirc(g)), ElementsAre(0));
    EXPECT_EQ(largest_cycle(g).length, 0);
  }
}

TEST(Loop, Cherry) {
  const PlaneTree t = star(2);
  const LoopGraph g = build_loop(t);
  EXPECT_EQ(g.vertex_count, 3);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.simple_edge_count(), 3);
  const LoopGraph b = build_loopbar(t);
  EXPECT_EQ(b.vertex_count, 2);
  ASSERT_EQ(b.edges.size(), 1u);
  EXPECT_EQ(b.edges[0], (MultiEdge{0, 1, 2}));
  // A single child: the two-edge cycle loses one edge, the other is a loop.
  const LoopGraph s = build_loopbar(PlaneTree::from_degree_sequence({1, 0}));
  EXPECT_EQ(s.vertex_count, 1);
  ASSERT_EQ(s.edges.size(), 1u);
  EXPECT_EQ(s.edges[0], (MultiEdge{0, 0, 1}));
  EXPECT_EQ(s.simple_edge_count(), 0);
}

TEST(Loop, Tau3) {
  const LoopGraph g = build_loop(tau3());
  EXPECT_THAT(g.edges, ElementsAre(MultiEdge{0, 1, 1}, MultiEdge{0, 3, 1},
                                   MultiEdge{1, 2, 2}, MultiEdge{1, 3, 1}));
  EXPECT_EQ(dist(g, 0, 2), 2);
  EXPECT_EQ(dist(g, 2, 2), 0);
  // 11 -> 1 -> 2 through the sibling edge.
  EXPECT_EQ(dist(g, 2, 3), 2);
  EXPECT_THAT(as_int(profile_hcirc(g)), ElementsAre(0, 1, 2, 1));
  EXPECT_EQ(largest_cycle(g).length, 3);
  EXPECT_EQ(largest_cycle(g).vertex, 0);
  std::ostringstream os;
  write_edge_csv(os, g);
  EXPECT_EQ(os.str(), "source,target,multiplicity\n0,1,1\n0,3,1\n1,2,2\n1,3,1\n");
}

TEST(Loop, StarProfile) {
  for (int k = 1; k <= 9; ++k) {
    const LoopGraph g = build_loop(star(k));
    const std::vector<Index> h = profile_hcirc(g);
    for (int j = 1; j <= k; ++j) EXPECT_EQ(h[j], std::min(j, k + 1 - j));
    EXPECT_EQ(largest_cycle(g).length, k + 1);
  }
}

TEST(Loop, MatchesOracleAdjacency) {
  RandomSource src(1, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 100; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep * 3, src);
    const std::vector<int> seq(t.degrees().begin(), t.degrees().end());
    const auto adj = oracle::loop_adjacency(seq);
    const LoopGraph g = build_loop(t);
    for (int s : {0, t.size() / 2, t.size() - 1}) {
      const auto d = oracle::bfs(adj, s);
      const auto e = bfs(g, s);
      ASSERT_EQ(std::vector<int>(e.begin(), e.end()), d);
    }
    // Edge count: k + 1 per internal vertex, one of them doubled when k = 1.
    std::int64_t multi = 0;
    for (const auto& e : g.edges) multi += e.multiplicity;
    std::int64_t expect = 0;
    for (Index v = 0; v < t.size(); ++v) expect += t.degree(v) > 0 ? t.degree(v) + 1 : 0;
    ASSERT_EQ(multi, expect);
  }
}

TEST(LoopBar, ContractionByUnionFind) {
  RandomSource src(2, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 200; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep % 40, src);
    std::vector<int> parent(t.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (Index u = 0; u < t.size(); ++u) {
      if (t.degree(u) > 0) parent[find(t.children(u).back())] = find(u);
    }
    std::set<int> classes;
    for (Index v = 0; v < t.size(); ++v) classes.insert(find(v));
    const LoopGraph b = build_loopbar(t);
    ASSERT_EQ(static_cast<std::size_t>(b.vertex_count), classes.size());
    ASSERT_EQ(b.vertex_count, t.leaf_count());
    for (Index u = 0; u < t.size(); ++u) {
      for (Index v = 0; v < t.size(); ++v) {
        ASSERT_EQ(find(u) == find(v), b.vertex_of[u] == b.vertex_of[v]);
      }
    }
    ASSERT_EQ(b.vertex_of[0], 0);
  }
}

TEST(LoopProperties, AncestorAndMrcaBounds) {
  RandomSource src(3, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  std::int64_t checked = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + static_cast<std::int64_t>(src.below(1000)), src);
    const CodingPaths p = coding_paths(t);
    const LoopGraph g = build_loop(t);
    const std::vector<Index> hc = profile_hcirc(g);
    const std::vector<Index> depth = t.depths();
    for (int k = 0; k < 25; ++k) {
      const auto j = static_cast<Index>(src.below(t.size()));
      // Ancestor bound along the whole ancestral line of j.
      for (Index i = j; i != kNoParent; i = t.parent(i)) {
        const std::int64_t dh = hc[j] - hc[i];
        ASSERT_GE(dh, 0);
        ASSERT_LE(dh, (p.lukasiewicz[j] - p.lukasiewicz[i]) +
                          (p.height[j] - p.height[i]));
      }
      const auto i = static_cast<Index>(src.below(t.size()));
      const Index m = mrca(t, depth, i, j);
      const std::int64_t d = dist(g, i, j);
      const std::int64_t approx = hc[i] + hc[j] - 2 * hc[m];
      ASSERT_LE(std::abs(d - approx), t.degree(m));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 10000);
}

TEST(LoopProperties, MetricAxiomsAndEdgeBound) {
  RandomSource src(4, 0);
  const OffspringLaw law = OffspringLaw::preset("critical-3pt");
  for (int rep = 0; rep < 50; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 50 + rep, src);
    const LoopGraph g = build_loop(t);
    std::vector<std::vector<Index>> d;
    for (Index s = 0; s < t.size(); ++s) d.push_back(bfs(g, s));
    for (Index a = 0; a < t.size(); ++a) {
      ASSERT_EQ(d[a][a], 0);
      for (Index b = 0; b < t.size(); ++b) {
        ASSERT_EQ(d[a][b], d[b][a]);
        ASSERT_GE(d[a][b], 0);
      }
    }
    for (int k = 0; k < 2000; ++k) {
      const auto a = static_cast<Index>(src.below(t.size()));
      const auto b = static_cast<Index>(src.below(t.size()));
      const auto c = static_cast<Index>(src.below(t.size()));
      ASSERT_LE(d[a][c], d[a][b] + d[b][c]);
    }
    for (Index v = 1; v < t.size(); ++v) {
      const Index k = t.degree(t.parent(v));
      ASSERT_LE(d[v][t.parent(v)], (k + 2) / 2);
    }
  }
}

TEST(LargestCycle, MatchesLargestJump) {
  RandomSource src(5, 0);
  const OffspringLaw law = OffspringLaw::preset("heavy");
  for (int rep = 0; rep < 200; ++rep) {
    const PlaneTree t = sample_bgw_at_least_n(law, 20, src);
    const CodingPaths p = coding_paths(t);
    std::int64_t jump = -1;
    Index arg = 0;
    for (Index i = 0; i < t.size(); ++i) {
      const std::int64_t x = p.lukasiewicz[i + 1] - p.lukasiewicz[i];
      if (x > jump) {
        jump = x;
        arg = i;
      }
    }
    const Cycle c = largest_cycle(build_loop(t));
    ASSERT_EQ(c.length, jump + 2);
    ASSERT_EQ(c.vertex, arg);
  }
}

}  // namespace
}  // namespace looplab
