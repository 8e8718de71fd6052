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

#ifndef LOOPLAB_PLANE_TREE_HPP_
#define LOOPLAB_PLANE_TREE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace looplab {

using Index = std::int32_t;

// Hard cap on tree size; samplers abort past it.
inline constexpr std::int64_t kMaxVertices = 2147483647;
inline constexpr Index kNoParent = -1;

// Rooted ordered tree stored by its depth-first degree sequence. Vertex i is
// the i-th vertex in lexicographic order; vertex 0 is the root.
class PlaneTree {
 public:
  // Single vertex.
  PlaneTree();

  // Throws Error(kNotAFirstPassagePath) unless the partial sums of
  // (k_i - 1) stay >= 0 before the end and reach -1 exactly at the end.
  static PlaneTree from_degree_sequence(std::vector<Index> seq);

  Index size() const { return static_cast<Index>(degree_.size()); }
  std::span<const Index> degrees() const { return degree_; }
  Index degree(Index v) const { return degree_[v]; }
  Index parent(Index v) const { return parent_[v]; }
  // 1-based position of v among the children of its parent (0 for the root).
  Index rank(Index v) const { return rank_[v]; }
  std::span<const Index> children(Index v) const {
    return {child_.data() + child_offset_[v],
            static_cast<std::size_t>(degree_[v])};
  }
  bool is_leaf(Index v) const { return degree_[v] == 0; }
  Index leaf_count() const;

  // Depth of every vertex (the height process).
  std::vector<Index> depths() const;
  // Number of descendants of every vertex, itself included.
  std::vector<Index> subtree_sizes() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
    return a.degree_ == b.degree_;
  }

 private:
  explicit PlaneTree(std::vector<Index> seq);

  std::vector<Index> degree_;
  std::vector<Index> parent_;
  std::vector<Index> rank_;
  std::vector<std::int64_t> child_offset_;
  std::vector<Index> child_;
};

struct CodingPaths {
  std::vector<std::int64_t> lukasiewicz;  // W_0..W_n
  std::vector<Index> height;              // H_0..H_{n-1}
  std::vector<Index> contour;             // C_0..C_{2(n-1)}
};

CodingPaths coding_paths(const PlaneTree& t);

// Zero past the end of the path.
std::int64_t padded_lukasiewicz(const CodingPaths& p, std::int64_t i);
Index padded_height(const CodingPaths& p, std::int64_t i);

// Vertex visited at each contour time.
std::vector<Index> contour_vertices(const PlaneTree& t);

// b(i) = 2i - H_i, the first contour time at vertex i.
std::int64_t lex_to_contour_index(const CodingPaths& p, Index i);
std::int64_t lex_to_contour_index(const PlaneTree& t, Index i);

struct Mirrored {
  PlaneTree tree;
  std::vector<Index> index_map;  // old index -> new index
};

Mirrored mirror(const PlaneTree& t);

PlaneTree subtree_at(const PlaneTree& t, Index v);
PlaneTree cut_at(const PlaneTree& t, Index v);

struct TrunkSkeleton {
  std::vector<Index> child_counts;  // x_1..x_h, root first
  std::vector<Index> spine_pos;     // u_1..u_h, 1-based

  std::size_t h() const { return child_counts.size(); }
  // Leaf count of the trunk: sum(x_i - 1) + 1.
  std::int64_t leaf_count() const;
  // The trunk as a plane tree (spine vertices are the only internal ones).
  PlaneTree to_tree() const;

  friend auto operator<=>(const TrunkSkeleton&,
                          const TrunkSkeleton&) = default;
};

// Throws Error(kRootHasNoTrunk) for v = 0.
TrunkSkeleton trunk_of(const PlaneTree& t, Index v);

Index mrca(const PlaneTree& t, std::span<const Index> depth, Index i,
           Index j);
Index mrca(const PlaneTree& t, Index i, Index j);

// Debug rendering of the label of v, e.g. "1.2.1"; the root is "∅".
std::string neveu_word(const PlaneTree& t, Index v);

}  // namespace looplab

#endif  // LOOPLAB_PLANE_TREE_HPP_
