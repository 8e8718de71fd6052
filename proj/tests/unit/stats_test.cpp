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

#include <cmath>

#include "looplab/random.hpp"
#include "looplab/stats.hpp"

namespace looplab {
namespace {

TEST(EmpiricalLaw, Quantiles) {
  const EmpiricalLaw e = EmpiricalLaw::from_samples({5, 1, 4, 2, 3});
  EXPECT_DOUBLE_EQ(e.median(), 3);
  EXPECT_DOUBLE_EQ(e.quantile(0.0), 1);
  EXPECT_DOUBLE_EQ(e.quantile(1.0), 5);
  EXPECT_DOUBLE_EQ(e.quantile(0.9), 5);
  EXPECT_DOUBLE_EQ(e.quantile(0.2), 1);
  EXPECT_DOUBLE_EQ(e.mean(), 3);
  EXPECT_DOUBLE_EQ(e.cdf(2.5), 0.4);
  const EmpiricalLaw w = EmpiricalLaw::from_weighted({1, 2}, {3, 1});
  EXPECT_DOUBLE_EQ(w.median(), 1);
  EXPECT_DOUBLE_EQ(w.mean(), 1.25);
}

TEST(Ks, OneSampleExact) {
  // Uniform sample at midpoints: D = 1 / (2n).
  std::vector<double> x;
  for (int i = 0; i < 10; ++i) x.push_back((i + 0.5) / 10);
  EXPECT_NEAR(ks_one_sample(x, [](double v) { return v; }), 0.05, 1e-15);
}

TEST(Ks, TwoSampleKnown) {
  EXPECT_DOUBLE_EQ(ks_two_sample({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(ks_two_sample({1, 2}, {3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(ks_two_sample({1, 3}, {2, 4}), 0.5);
  // Ties across samples.
  EXPECT_DOUBLE_EQ(ks_two_sample({1, 1, 2}, {1, 2, 2}), 1.0 / 3);
}

TEST(Ks, NullCalibration) {
  RandomSource src(1, 0);
  int reject = 0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> x(500);
    for (auto& v : x) v = src.uniform();
    const double d = ks_one_sample(x, [](double v) { return v; });
    reject += kolmogorov_pvalue(d, 500) < 0.05;
  }
  EXPECT_NEAR(reject / double(reps), 0.05, 0.035);
}

TEST(Kolmogorov, KnownQuantile) {
  // Asymptotic 5% point is 1.3581.
  EXPECT_NEAR(kolmogorov_pvalue(1.3581 / std::sqrt(1e8), 1e8), 0.05, 1e-3);
}

TEST(Wilson, Bounds) {
  const Interval i = wilson_interval(0, 100);
  EXPECT_DOUBLE_EQ(i.lo, 0.0);
  EXPECT_GT(i.hi, 0.0);
  const Interval j = wilson_interval(50, 100);
  EXPECT_NEAR(0.5 * (j.lo + j.hi), 0.5, 1e-12);
}

TEST(MeanSe, Simple) {
  const std::vector<double> x{1, 2, 3, 4};
  const MeanEstimate m = mean_and_se(x);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.se, std::sqrt(5.0 / 3 / 4), 1e-15);
}

}  // namespace
}  // namespace looplab
