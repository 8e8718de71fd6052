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

#include "looplab/loop_graph.hpp"

#include <algorithm>
#include <ostream>

#include "looplab/error.hpp"

namespace looplab {

namespace {

// Edges of Loop(t) on tree vertices: each vertex with k >= 1 children
// closes the cycle u, c_1, ..., c_k, u. Loop-bar drops the closing edge
// (c_k, u), the one it contracts.
std::vector<std::pair<Index, Index>> loop_pairs(const PlaneTree& t,
                                                LoopKind kind) {
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(t.size()) * 2);
  for (Index u = 0; u < t.size(); ++u) {
    const auto kids = t.children(u);
    if (kids.empty()) continue;
    pairs.emplace_back(u, kids.front());
    for (std::size_t i = 1; i < kids.size(); ++i) {
      pairs.emplace_back(kids[i - 1], kids[i]);
    }
    if (kind == LoopKind::kLoop) pairs.emplace_back(kids.back(), u);
  }
  return pairs;
}

LoopGraph assemble(const PlaneTree& t, LoopKind kind,
                   std::vector<Index> vertex_of, Index count) {
  LoopGraph g;
  g.kind = kind;
  g.vertex_count = count;
  g.origin.assign(static_cast<std::size_t>(count), -1);
  for (Index v = t.size() - 1; v >= 0; --v) g.origin[vertex_of[v]] = v;

  std::vector<std::pair<Index, Index>> pairs = loop_pairs(t, kind);
  for (auto& [a, b] : pairs) {
    a = vertex_of[a];
    b = vertex_of[b];
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::int64_t> degree(static_cast<std::size_t>(count) + 1, 0);
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    g.edges.push_back({pairs[i].first, pairs[i].second,
                       static_cast<Index>(j - i)});
    if (pairs[i].first != pairs[i].second) {
      ++degree[pairs[i].first + 1];
      ++degree[pairs[i].second + 1];
    }
    i = j;
  }
  for (Index v = 0; v < count; ++v) degree[v + 1] += degree[v];
  g.offsets = degree;
  g.neighbors.resize(static_cast<std::size_t>(g.offsets.back()));
  std::vector<std::int64_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (const MultiEdge& e : g.edges) {
    if (e.a == e.b) continue;
    g.neighbors[fill[e.a]++] = e.b;
    g.neighbors[fill[e.b]++] = e.a;
  }
  for (Index u = 0; u < t.size(); ++u) {
    if (t.degree(u) + 1 > g.cycle_length && t.degree(u) > 0) {
      g.cycle_length = t.degree(u) + 1;
      g.cycle_vertex = u;
    }
  }
  g.vertex_of = std::move(vertex_of);
  return g;
}

}  // namespace

LoopGraph build_loop(const PlaneTree& t) {
  std::vector<Index> id(static_cast<std::size_t>(t.size()));
  for (Index v = 0; v < t.size(); ++v) id[v] = v;
  return assemble(t, LoopKind::kLoop, std::move(id), t.size());
}

LoopGraph build_loopbar(const PlaneTree& t) {
  // A last child joins the class of its parent; parents precede children in
  // lexicographic order, so one pass suffices.
  std::vector<Index> id(static_cast<std::size_t>(t.size()));
  Index count = 0;
  for (Index v = 0; v < t.size(); ++v) {
    const Index p = t.parent(v);
    if (p != kNoParent && t.rank(v) == t.degree(p)) {
      id[v] = id[p];
    } else {
      id[v] = count++;
    }
  }
  return assemble(t, LoopKind::kLoopBar, std::move(id), count);
}

void bfs(const LoopGraph& g, Index source, std::vector<Index>& dist,
         std::vector<Index>& queue) {
  dist.assign(static_cast<std::size_t>(g.vertex_count), kUnreached);
  queue.resize(static_cast<std::size_t>(g.vertex_count));
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Index v = queue[head++];
    const Index d = dist[v] + 1;
    const std::int64_t end = g.offsets[v + 1];
    for (std::int64_t e = g.offsets[v]; e < end; ++e) {
      const Index w = g.neighbors[e];
      if (dist[w] == kUnreached) {
        dist[w] = d;
        queue[tail++] = w;
      }
    }
  }
}

std::vector<Index> bfs(const LoopGraph& g, Index source) {
  std::vector<Index> dist, queue;
  bfs(g, source, dist, queue);
  return dist;
}

Index dist(const LoopGraph& g, Index a, Index b) {
  if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count) {
    throw Error(ErrorKind::kInvalidArgument, "vertex outside the graph");
  }
  if (a == b) return 0;
  std::vector<Index> d(static_cast<std::size_t>(g.vertex_count), kUnreached);
  std::vector<Index> queue;
  queue.reserve(64);
  d[a] = 0;
  queue.push_back(a);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index v = queue[head];
    for (Index w : g.adjacent(v)) {
      if (d[w] != kUnreached) continue;
      d[w] = d[v] + 1;
      if (w == b) return d[w];
      queue.push_back(w);
    }
  }
  return kUnreached;
}

std::vector<Index> profile_hcirc(const LoopGraph& g) {
  const std::vector<Index> d = bfs(g, 0);
  std::vector<Index> out(g.vertex_of.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d[g.vertex_of[i]];
  return out;
}

Cycle largest_cycle(const LoopGraph& g) {
  return {g.cycle_length, g.cycle_vertex};
}

void write_edge_csv(std::ostream& os, const LoopGraph& g) {
  os << "source,target,multiplicity\n";
  for (const MultiEdge& e : g.edges) {
    os << e.a << ',' << e.b << ',' << e.multiplicity << '\n';
  }
}

}  // namespace looplab
