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

#include <sstream>

#include "looplab/bgw.hpp"
#include "looplab/error.hpp"
#include "looplab/plane_tree.hpp"
#include "looplab/tree_io.hpp"
#include "oracles.hpp"

namespace looplab {
namespace {

using ::testing::ElementsAre;

PlaneTree tau3() { return PlaneTree::from_degree_sequence({2, 1, 0, 0}); }

std::vector<int> as_int(std::span<const Index> s) {
  return {s.begin(), s.end()};
}

template <class T>
std::vector<int> as_int(const std::vector<T>& s) {
  return {s.begin(), s.end()};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInvalidArgument;
}

TEST(PlaneTree, SingleVertex) {
  const PlaneTree t = PlaneTree::from_degree_sequence({0});
  EXPECT_EQ(t.size(), 1);
  EXPECT_EQ(t, PlaneTree());
  const CodingPaths p = coding_paths(t);
  EXPECT_THAT(p.lukasiewicz, ElementsAre(0, -1));
  EXPECT_THAT(p.height, ElementsAre(0));
  EXPECT_THAT(p.contour, ElementsAre(0));
}

TEST(PlaneTree, Tau3Structure) {
  const PlaneTree t = tau3();
  EXPECT_EQ(t.parent(0), kNoParent);
  EXPECT_EQ(t.parent(1), 0);
  EXPECT_EQ(t.parent(2), 1);
  EXPECT_EQ(t.parent(3), 0);
  EXPECT_THAT(as_int(t.children(0)), ElementsAre(1, 3));
  EXPECT_EQ(t.rank(3), 2);
  EXPECT_EQ(neveu_word(t, 2), "1.1");
  EXPECT_EQ(neveu_word(t, 3), "2");
  EXPECT_EQ(t.leaf_count(), 2);
}

TEST(PlaneTree, RejectsBadSequences) {
  EXPECT_EQ(kind_of([] { PlaneTree::from_degree_sequence({1, 1, 0, 0}); }),
            ErrorKind::kNotAFirstPassagePath);
  EXPECT_EQ(kind_of([] { PlaneTree::from_degree_sequence({0, 0}); }),
            ErrorKind::kNotAFirstPassagePath);
  EXPECT_EQ(kind_of([] { PlaneTree::from_degree_sequence({}); }),
            ErrorKind::kNotAFirstPassagePath);
  EXPECT_EQ(kind_of([] { PlaneTree::from_degree_sequence({-1}); }),
            ErrorKind::kNotAFirstPassagePath);
}

TEST(CodingPaths, Tau3) {
  const CodingPaths p = coding_paths(tau3());
  EXPECT_THAT(p.lukasiewicz, ElementsAre(0, 1, 1, 0, -1));
  EXPECT_THAT(p.height, ElementsAre(0, 1, 2, 1));
  EXPECT_THAT(p.contour, ElementsAre(0, 1, 2, 1, 0, 1, 0));
}

TEST(CodingPaths, Cherry) {
  const CodingPaths p = coding_paths(PlaneTree::from_degree_sequence({2, 0, 0}));
  EXPECT_THAT(p.lukasiewicz, ElementsAre(0, 1, 0, -1));
  EXPECT_THAT(p.height, ElementsAre(0, 1, 1));
  EXPECT_THAT(p.contour, ElementsAre(0, 1, 0, 1, 0));
}

TEST(CodingPaths, Padding) {
  const CodingPaths p = coding_paths(tau3());
  EXPECT_EQ(padded_lukasiewicz(p, 4), -1);
  EXPECT_EQ(padded_lukasiewicz(p, 9), 0);
  EXPECT_EQ(padded_height(p, 3), 1);
  EXPECT_EQ(padded_height(p, 4), 0);
}

TEST(CodingPaths, MatchesRecursiveOracle) {
  RandomSource src(11, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 300; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep % 60, src);
    const std::vector<int> seq = as_int(t.degrees());
    const oracle::Paths o = oracle::paths(seq);
    const CodingPaths p = coding_paths(t);
    ASSERT_EQ(as_int(p.lukasiewicz), o.w);
    ASSERT_EQ(as_int(p.height), o.h);
    ASSERT_EQ(as_int(p.contour), o.c);
  }
}

TEST(LexToContour, Tau3) {
  const PlaneTree t = tau3();
  const std::vector<Index> cv = contour_vertices(t);
  EXPECT_EQ(lex_to_contour_index(t, 0), 0);
  EXPECT_EQ(lex_to_contour_index(t, 2), 2);
  EXPECT_EQ(cv[2], 2);
  EXPECT_EQ(lex_to_contour_index(t, 3), 5);
  EXPECT_EQ(cv[5], 3);
}

TEST(LexToContour, MonotoneAndFirstVisit) {
  RandomSource src(12, 0);
  const OffspringLaw law = OffspringLaw::preset("critical-3pt");
  for (int rep = 0; rep < 100; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 2 * rep + 1, src);
    const CodingPaths p = coding_paths(t);
    const std::vector<Index> cv = contour_vertices(t);
    std::int64_t prev = -1;
    for (Index i = 0; i < t.size(); ++i) {
      const std::int64_t b = lex_to_contour_index(p, i);
      ASSERT_EQ(b, 2 * i - p.height[i]);
      ASSERT_GT(b, prev);
      ASSERT_EQ(cv[b], i);
      for (std::int64_t j = 0; j < b; ++j) ASSERT_NE(cv[j], i);
      prev = b;
    }
  }
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(PlaneTree()).tree, PlaneTree());
  const Mirrored m = mirror(tau3());
  EXPECT_THAT(as_int(m.tree.degrees()), ElementsAre(2, 0, 1, 0));
  EXPECT_THAT(as_int(m.index_map), ElementsAre(0, 2, 3, 1));
}

TEST(Mirror, InvolutionAndInvariants) {
  RandomSource src(13, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 200; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep, src);
    const Mirrored m = mirror(t);
    ASSERT_EQ(mirror(m.tree).tree, t);
    ASSERT_EQ(m.tree.size(), t.size());
    ASSERT_EQ(m.tree.leaf_count(), t.leaf_count());
    std::vector<int> a = as_int(t.degrees()), b = as_int(m.tree.degrees());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ASSERT_EQ(a, b);
    for (Index v = 0; v < t.size(); ++v) {
      ASSERT_EQ(m.tree.degree(m.index_map[v]), t.degree(v));
    }
  }
}

TEST(SubtreeCut, Examples) {
  const PlaneTree t = tau3();
  EXPECT_EQ(subtree_at(t, 0), t);
  EXPECT_EQ(cut_at(t, 0), PlaneTree());
  EXPECT_THAT(as_int(subtree_at(t, 1).degrees()), ElementsAre(1, 0));
  EXPECT_THAT(as_int(cut_at(t, 1).degrees()), ElementsAre(2, 0, 0));
}

TEST(SubtreeCut, SizeIdentity) {
  RandomSource src(14, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 10000; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep % 40, src);
    const auto v = static_cast<Index>(src.below(t.size()));
    ASSERT_EQ(subtree_at(t, v).size() + cut_at(t, v).size(), t.size() + 1);
  }
}

TEST(Trunk, Examples) {
  const PlaneTree t = tau3();
  const TrunkSkeleton a = trunk_of(t, 2);
  EXPECT_THAT(as_int(a.child_counts), ElementsAre(2, 1));
  EXPECT_THAT(as_int(a.spine_pos), ElementsAre(1, 1));
  EXPECT_EQ(a.leaf_count(), 2);
  const TrunkSkeleton b = trunk_of(t, 3);
  EXPECT_THAT(as_int(b.child_counts), ElementsAre(2));
  EXPECT_THAT(as_int(b.spine_pos), ElementsAre(2));
  EXPECT_EQ(b.leaf_count(), 2);
  EXPECT_EQ(kind_of([&] { trunk_of(t, 0); }), ErrorKind::kRootHasNoTrunk);

  const PlaneTree chain = PlaneTree::from_degree_sequence({1, 1, 1, 0});
  const TrunkSkeleton c = trunk_of(chain, 3);
  EXPECT_THAT(as_int(c.child_counts), ElementsAre(1, 1, 1));
  EXPECT_EQ(c.leaf_count(), 1);
}

TEST(Trunk, TreeFormHasLeafCountAndSpine) {
  RandomSource src(15, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 500; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 2 + rep % 50, src);
    const auto v = static_cast<Index>(1 + src.below(t.size() - 1));
    const TrunkSkeleton s = trunk_of(t, v);
    const PlaneTree tt = s.to_tree();
    ASSERT_EQ(tt.leaf_count(), s.leaf_count());
    Index internal = 0;
    for (Index u = 0; u < tt.size(); ++u) internal += tt.is_leaf(u) ? 0 : 1;
    ASSERT_EQ(static_cast<std::size_t>(internal), s.h());
    ASSERT_EQ(s.h(), static_cast<std::size_t>(t.depths()[v]));
  }
}

TEST(Mrca, Examples) {
  const PlaneTree t = tau3();
  EXPECT_EQ(mrca(t, 1, 2), 1);
  EXPECT_EQ(mrca(t, 2, 3), 0);
  EXPECT_EQ(mrca(t, 2, 2), 2);
}

TEST(Mrca, ContourMinimum) {
  RandomSource src(16, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 200; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep, src);
    const CodingPaths p = coding_paths(t);
    for (int k = 0; k < 20; ++k) {
      const auto i = static_cast<Index>(src.below(t.size()));
      const auto j = static_cast<Index>(src.below(t.size()));
      const Index m = mrca(t, i, j);
      std::int64_t lo = lex_to_contour_index(p, i);
      std::int64_t hi = lex_to_contour_index(p, j);
      if (lo > hi) std::swap(lo, hi);
      const Index cmin = *std::min_element(p.contour.begin() + lo,
                                           p.contour.begin() + hi + 1);
      ASSERT_EQ(p.height[m], cmin);
    }
  }
}

// The count of children of strict ancestors branching to the right of the
// ancestral line equals W_i.
TEST(Properties, RightBranchingIdentity) {
  RandomSource src(17, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 200; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep, src);
    const CodingPaths p = coding_paths(t);
    for (Index v = 0; v < t.size(); ++v) {
      std::int64_t right = 0;
      for (Index u = v; t.parent(u) != kNoParent; u = t.parent(u)) {
        right += t.degree(t.parent(u)) - t.rank(u);
      }
      ASSERT_EQ(right, p.lukasiewicz[v]);
    }
  }
}

TEST(Dsv1, RoundTrip) {
  RandomSource src(18, 0);
  const OffspringLaw law = OffspringLaw::preset("geometric");
  for (int rep = 0; rep < 50; ++rep) {
    const PlaneTree t = sample_bgw_exact_n(law, 1 + rep * 7, src);
    std::stringstream ss;
    write_dsv1(ss, t);
    const std::string text = ss.str();
    const PlaneTree back = read_dsv1(ss);
    ASSERT_EQ(back, t);
    std::stringstream again;
    write_dsv1(again, back);
    ASSERT_EQ(again.str(), text);
  }
  std::stringstream s3;
  write_dsv1(s3, tau3());
  EXPECT_EQ(s3.str(), "4\n2 1 0 0\n");
}

TEST(Dsv1, RejectsMalformed) {
  std::stringstream bad("3\n2 0\n");
  EXPECT_EQ(kind_of([&] { read_dsv1(bad); }), ErrorKind::kParse);
  std::stringstream bad2("2\n1 1\n");
  EXPECT_EQ(kind_of([&] { read_dsv1(bad2); }),
            ErrorKind::kNotAFirstPassagePath);
}

}  // namespace
}  // namespace looplab
