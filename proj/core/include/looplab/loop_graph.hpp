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

#ifndef LOOPLAB_LOOP_GRAPH_HPP_
#define LOOPLAB_LOOP_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "looplab/plane_tree.hpp"

namespace looplab {

struct MultiEdge {
  Index a = 0;  // a <= b
  Index b = 0;
  Index multiplicity = 1;
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

enum class LoopKind { kLoop, kLoopBar };

// Loop(t) or Loop-bar(t). Vertex 0 is the root (the class of the tree root).
// `edges` is the map-level multigraph (self-loops kept); the CSR arrays hold
// the simple graph used for distances.
struct LoopGraph {
  LoopKind kind = LoopKind::kLoop;
  Index vertex_count = 1;
  std::vector<MultiEdge> edges;
  std::vector<std::int64_t> offsets;  // CSR, size vertex_count + 1
  std::vector<Index> neighbors;
  std::vector<Index> vertex_of;  // tree vertex -> graph vertex
  std::vector<Index> origin;     // graph vertex -> first tree vertex mapped
  Index cycle_length = 0;        // max child count + 1, 0 for a single vertex
  Index cycle_vertex = 0;        // tree vertex carrying it

  std::span<const Index> adjacent(Index v) const {
    return {neighbors.data() + offsets[v],
            static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
  }
  std::int64_t simple_edge_count() const {
    return static_cast<std::int64_t>(neighbors.size()) / 2;
  }
};

LoopGraph build_loop(const PlaneTree& t);
LoopGraph build_loopbar(const PlaneTree& t);

inline constexpr Index kUnreached = -1;

// Single-source BFS distances (graph vertices).
std::vector<Index> bfs(const LoopGraph& g, Index source);
void bfs(const LoopGraph& g, Index source, std::vector<Index>& dist,
         std::vector<Index>& queue);

// Distance between graph vertices a and b.
Index dist(const LoopGraph& g, Index a, Index b);

// H°_i: distance from the root to the image of tree vertex i, in tree order.
std::vector<Index> profile_hcirc(const LoopGraph& g);

struct Cycle {
  Index length = 0;
  Index vertex = 0;
};
Cycle largest_cycle(const LoopGraph& g);

void write_edge_csv(std::ostream& os, const LoopGraph& g);

}  // namespace looplab

#endif  // LOOPLAB_LOOP_GRAPH_HPP_
