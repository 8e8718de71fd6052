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

#include <gtest/gtest.h>

#include <set>

#include "looplab/random.hpp"

namespace looplab {
namespace {

TEST(RandomSource, ReproducibleStreams) {
  RandomSource a(42, 7), b(42, 7), c(42, 8);
  bool differ = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a(), y = b(), z = c();
    EXPECT_EQ(x, y);
    differ = differ || x != z;
  }
  EXPECT_TRUE(differ);
}

// Frozen first outputs: any change to the engine or seeding breaks
// cross-platform reproducibility of every artifact.
TEST(RandomSource, FrozenValues) {
  RandomSource a(1, 0);
  EXPECT_EQ(a(), 7712288819789024404ULL);
  EXPECT_EQ(a(), 6069372287434807842ULL);
  EXPECT_EQ(a(), 2874520805244216285ULL);
  RandomSource u(2026, 3);
  EXPECT_DOUBLE_EQ(u.uniform(), 0.7902167703554672);
}

TEST(RandomSource, BelowIsUniform) {
  RandomSource r(9, 9);
  std::vector<int> c(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++c[r.below(7)];
  for (int k = 0; k < 7; ++k) EXPECT_NEAR(c[k], n / 7.0, 4 * std::sqrt(n / 7.0));
}

TEST(RandomSource, DerivedStreamsDistinct) {
  const RandomSource base(100, 0);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    RandomSource d = base.derive(k);
    firsts.insert(d());
  }
  EXPECT_EQ(firsts.size(), 1000u);
  RandomSource x = base.derive(5), y = base.derive(5);
  EXPECT_EQ(x(), y());
}

TEST(RandomSource, UniformPosNeverZero) {
  RandomSource r(1, 1);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform_pos();
    ASSERT_GT(u, 0.0);
    ASSERT_LE(u, 1.0);
  }
}

}  // namespace
}  // namespace looplab
