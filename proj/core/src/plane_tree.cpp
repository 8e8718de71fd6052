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

#include "looplab/plane_tree.hpp"

#include <algorithm>
#include <utility>

#include "looplab/error.hpp"

namespace looplab {

PlaneTree::PlaneTree() : PlaneTree(std::vector<Index>{0}) {}

PlaneTree PlaneTree::from_degree_sequence(std::vector<Index> seq) {
  if (seq.empty()) {
    throw Error(ErrorKind::kNotAFirstPassagePath, "empty degree sequence");
  }
  if (static_cast<std::int64_t>(seq.size()) > kMaxVertices) {
    throw Error(ErrorKind::kTreeTooLarge, "degree sequence exceeds the cap");
  }
  std::int64_t w = 0;
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seq[i] < 0) {
      throw Error(ErrorKind::kNotAFirstPassagePath, "negative child count");
    }
    w += static_cast<std::int64_t>(seq[i]) - 1;
    if (i + 1 < n && w < 0) {
      throw Error(ErrorKind::kNotAFirstPassagePath,
                  "path reaches -1 at index " + std::to_string(i + 1) +
                      " before " + std::to_string(n));
    }
  }
  if (w != -1) {
    throw Error(ErrorKind::kNotAFirstPassagePath,
                "path ends at " + std::to_string(w) + " instead of -1");
  }
  return PlaneTree(std::move(seq));
}

PlaneTree::PlaneTree(std::vector<Index> seq) : degree_(std::move(seq)) {
  const Index n = size();
  parent_.assign(n, kNoParent);
  rank_.assign(n, 0);
  child_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Index v = 0; v < n; ++v) {
    child_offset_[v + 1] = child_offset_[v] + degree_[v];
  }
  child_.assign(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);

  // Depth-first reconstruction: the stack holds vertices that still expect
  // children, with the count already attached.
  std::vector<std::pair<Index, Index>> stack;
  stack.reserve(64);
  for (Index v = 0; v < n; ++v) {
    if (v > 0) {
      auto& [p, attached] = stack.back();
      parent_[v] = p;
      rank_[v] = attached + 1;
      child_[child_offset_[p] + attached] = v;
      if (++attached == degree_[p]) stack.pop_back();
    }
    if (degree_[v] > 0) stack.emplace_back(v, 0);
  }
}

Index PlaneTree::leaf_count() const {
  return static_cast<Index>(
      std::count(degree_.begin(), degree_.end(), Index{0}));
}

std::vector<Index> PlaneTree::depths() const {
  std::vector<Index> d(degree_.size(), 0);
  for (Index v = 1; v < size(); ++v) d[v] = d[parent_[v]] + 1;
  return d;
}

std::vector<Index> PlaneTree::subtree_sizes() const {
  std::vector<Index> s(degree_.size(), 1);
  for (Index v = size() - 1; v > 0; --v) s[parent_[v]] += s[v];
  return s;
}

CodingPaths coding_paths(const PlaneTree& t) {
  CodingPaths p;
  const Index n = t.size();
  p.lukasiewicz.resize(static_cast<std::size_t>(n) + 1);
  p.lukasiewicz[0] = 0;
  for (Index i = 0; i < n; ++i) {
    p.lukasiewicz[i + 1] = p.lukasiewicz[i] + t.degree(i) - 1;
  }
  p.height = t.depths();
  const std::vector<Index> cv = contour_vertices(t);
  p.contour.resize(cv.size());
  for (std::size_t j = 0; j < cv.size(); ++j) p.contour[j] = p.height[cv[j]];
  return p;
}

std::int64_t padded_lukasiewicz(const CodingPaths& p, std::int64_t i) {
  if (i < 0 || i >= static_cast<std::int64_t>(p.lukasiewicz.size())) return 0;
  return p.lukasiewicz[i];
}

Index padded_height(const CodingPaths& p, std::int64_t i) {
  if (i < 0 || i >= static_cast<std::int64_t>(p.height.size())) return 0;
  return p.height[i];
}

std::vector<Index> contour_vertices(const PlaneTree& t) {
  const Index n = t.size();
  std::vector<Index> out;
  out.reserve(2 * static_cast<std::size_t>(n) - 1);
  // (vertex, next child slot)
  std::vector<std::pair<Index, Index>> stack;
  stack.emplace_back(0, 0);
  out.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < t.degree(v)) {
      const Index c = t.children(v)[next++];
      stack.emplace_back(c, 0);
      out.push_back(c);
    } else {
      stack.pop_back();
      if (!stack.empty()) out.push_back(stack.back().first);
    }
  }
  return out;
}

std::int64_t lex_to_contour_index(const CodingPaths& p, Index i) {
  return 2 * static_cast<std::int64_t>(i) - p.height[i];
}

std::int64_t lex_to_contour_index(const PlaneTree& t, Index i) {
  Index h = 0;
  for (Index v = i; v != 0; v = t.parent(v)) ++h;
  return 2 * static_cast<std::int64_t>(i) - h;
}

Mirrored mirror(const PlaneTree& t) {
  const Index n = t.size();
  Mirrored m;
  m.index_map.assign(n, 0);
  std::vector<Index> seq;
  seq.reserve(n);
  std::vector<Index> stack{0};
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    m.index_map[v] = static_cast<Index>(seq.size());
    seq.push_back(t.degree(v));
    // Pushed in order so the last child is visited first.
    for (Index c : t.children(v)) stack.push_back(c);
  }
  m.tree = PlaneTree::from_degree_sequence(std::move(seq));
  return m;
}

namespace {

Index subtree_end(const PlaneTree& t, Index v) {
  // Descendants of v occupy a contiguous lexicographic range.
  std::int64_t need = 1;
  Index u = v;
  while (need > 0) {
    need += t.degree(u) - 1;
    ++u;
  }
  return u;
}

}  // namespace

PlaneTree subtree_at(const PlaneTree& t, Index v) {
  const Index end = subtree_end(t, v);
  return PlaneTree::from_degree_sequence(
      std::vector<Index>(t.degrees().begin() + v, t.degrees().begin() + end));
}

PlaneTree cut_at(const PlaneTree& t, Index v) {
  const Index end = subtree_end(t, v);
  std::vector<Index> seq(t.degrees().begin(), t.degrees().begin() + v + 1);
  seq.back() = 0;
  seq.insert(seq.end(), t.degrees().begin() + end, t.degrees().end());
  return PlaneTree::from_degree_sequence(std::move(seq));
}

std::int64_t TrunkSkeleton::leaf_count() const {
  std::int64_t s = 1;
  for (Index x : child_counts) s += x - 1;
  return s;
}

PlaneTree TrunkSkeleton::to_tree() const {
  std::vector<Index> seq;
  seq.reserve(static_cast<std::size_t>(leaf_count()) + h());
  for (std::size_t i = 0; i < h(); ++i) {
    seq.push_back(child_counts[i]);
    for (Index j = 1; j < spine_pos[i]; ++j) seq.push_back(0);
  }
  seq.push_back(0);
  // Right siblings are visited after the whole spine below them.
  for (std::size_t i = h(); i-- > 0;) {
    for (Index j = spine_pos[i]; j < child_counts[i]; ++j) seq.push_back(0);
  }
  return PlaneTree::from_degree_sequence(std::move(seq));
}

TrunkSkeleton trunk_of(const PlaneTree& t, Index v) {
  if (v == 0) throw Error(ErrorKind::kRootHasNoTrunk, "trunk of the root");
  TrunkSkeleton s;
  for (Index u = v; u != 0; u = t.parent(u)) {
    s.child_counts.push_back(t.degree(t.parent(u)));
    s.spine_pos.push_back(t.rank(u));
  }
  std::reverse(s.child_counts.begin(), s.child_counts.end());
  std::reverse(s.spine_pos.begin(), s.spine_pos.end());
  return s;
}

Index mrca(const PlaneTree& t, std::span<const Index> depth, Index i,
           Index j) {
  while (depth[i] > depth[j]) i = t.parent(i);
  while (depth[j] > depth[i]) j = t.parent(j);
  while (i != j) {
    i = t.parent(i);
    j = t.parent(j);
  }
  return i;
}

Index mrca(const PlaneTree& t, Index i, Index j) {
  auto depth_of = [&](Index v) {
    Index h = 0;
    for (; v != 0; v = t.parent(v)) ++h;
    return h;
  };
  Index di = depth_of(i);
  Index dj = depth_of(j);
  for (; di > dj; --di) i = t.parent(i);
  for (; dj > di; --dj) j = t.parent(j);
  while (i != j) {
    i = t.parent(i);
    j = t.parent(j);
  }
  return i;
}

std::string neveu_word(const PlaneTree& t, Index v) {
  if (v == 0) return "∅";
  std::vector<Index> labels;
  for (Index u = v; u != 0; u = t.parent(u)) labels.push_back(t.rank(u));
  std::string out;
  for (std::size_t k = labels.size(); k-- > 0;) {
    out += std::to_string(labels[k]);
    if (k > 0) out += '.';
  }
  return out;
}

}  // namespace looplab
