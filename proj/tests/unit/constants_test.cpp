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

#include "looplab/constants.hpp"
#include "looplab/error.hpp"

namespace looplab {
namespace {

TEST(Constants, ClosedForms) {
  EXPECT_DOUBLE_EQ(c_mu(OffspringLaw::preset("binary")), 1.0);
  EXPECT_NEAR(c_mu(OffspringLaw::preset("geometric")), 4.0 / 3, 1e-12);
  EXPECT_DOUBLE_EQ(c_bar_mu(OffspringLaw::preset("binary")), 0.5);
  EXPECT_DOUBLE_EQ(c_mu(OffspringLaw::critical_inf_var()), 0.5);
  try {
    c_mu(OffspringLaw::preset("heavy"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotCritical);
  }
}

// Exact expectation of the spine-step variable against the closed form.
TEST(Constants, SpineSumsMatchFormula) {
  for (const char* name : {"binary", "critical-3pt"}) {
    const OffspringLaw law = OffspringLaw::preset(name);
    EXPECT_NEAR(c_mu_exact_sum(law), c_mu(law), 1e-15) << name;
    EXPECT_NEAR(c_bar_mu_exact_sum(law), c_bar_mu(law), 1e-15) << name;
  }
  const OffspringLaw t = OffspringLaw::finite_table({0.4, 0.375, 0.1, 0.075, 0.05});
  ASSERT_TRUE(std::fabs(t.mean() - 1.0) < 1e-12);
  EXPECT_NEAR(c_mu_exact_sum(t), c_mu(t), 1e-15);
  EXPECT_NEAR(c_bar_mu_exact_sum(t), c_bar_mu(t), 1e-15);
}

TEST(Constants, MonteCarloOracle) {
  const OffspringLaw g = OffspringLaw::preset("geometric");
  const MeanEstimate m = c_mu_oracle(g, 1000000, RandomSource(1, 0));
  EXPECT_NEAR(m.mean, 4.0 / 3, 3 * m.se);
  const MeanEstimate b = c_bar_mu_oracle(OffspringLaw::preset("binary"), 1000,
                                         RandomSource(1, 1));
  EXPECT_NEAR(b.mean, 0.5, 3 * b.se);
}

TEST(Scaling, FiniteVariance) {
  const std::vector<std::int64_t> ns{1, 8, 1000};
  const auto b = bn_values(OffspringLaw::preset("binary"), ns);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    EXPECT_NEAR(b[i], std::sqrt(ns[i] / 2.0), 1e-12);
  }
  const auto g = bn_values(OffspringLaw::preset("geometric"), ns);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    EXPECT_NEAR(g[i], std::sqrt(double(ns[i])), 1e-9);
  }
}

TEST(Scaling, InfiniteVarianceGrowsFasterThanSqrt) {
  const OffspringLaw law = OffspringLaw::critical_inf_var();
  const ScalingSequence s(law);
  EXPECT_EQ(s.mode(), ScalingMode::kInfiniteVariance);
  const std::vector<std::int64_t> ns{1000, 10000, 100000, 1000000, 10000000};
  const auto b = bn_values(law, ns);
  for (std::size_t i = 1; i < ns.size(); ++i) {
    EXPECT_GE(b[i], b[i - 1]);
    EXPECT_GT(b[i] / std::sqrt(double(ns[i])), b[i - 1] / std::sqrt(double(ns[i - 1])));
  }
  // Defining relation at the solution.
  const double bb = b[2];
  const auto m = static_cast<std::int64_t>(bb);
  const double m1 = law.law().truncated_moment(1, m);
  const double v = law.law().truncated_moment(2, m) - m1 * m1;
  EXPECT_LE(1e5 * v, 2 * bb * bb * (1 + 1e-9));
}

}  // namespace
}  // namespace looplab
