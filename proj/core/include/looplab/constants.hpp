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

#ifndef LOOPLAB_CONSTANTS_HPP_
#define LOOPLAB_CONSTANTS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "looplab/offspring_law.hpp"
#include "looplab/random.hpp"
#include "looplab/stats.hpp"

namespace looplab {

inline constexpr double kCriticalTolerance = 1e-9;

// Throws kNotCritical unless |mean - 1| <= kCriticalTolerance.
void require_critical(const OffspringLaw& law);

// (sigma^2 + 4 - mu(even)) / 4, or 1/2 with infinite variance.
double c_mu(const OffspringLaw& law);
// (sigma^2 + mu(even)) / 4; finite variance only.
double c_bar_mu(const OffspringLaw& law);

// Monte Carlo estimates of E[min(U, X* - U + 1)] and E[min(U, X* - U)],
// X* size-biased and U uniform on {1..X*}.
MeanEstimate c_mu_oracle(const OffspringLaw& law, std::int64_t draws,
                         RandomSource src);
MeanEstimate c_bar_mu_oracle(const OffspringLaw& law, std::int64_t draws,
                             RandomSource src);
// The same expectations summed exactly over the size-biased law (finite
// support only).
double c_mu_exact_sum(const OffspringLaw& law);
double c_bar_mu_exact_sum(const OffspringLaw& law);

enum class ScalingMode { kFiniteVariance, kInfiniteVariance };

// B_n: sigma sqrt(n / 2), or the smallest B with n v(floor B) <= 2 B^2 where
// v(m) = Var(X 1{X <= m}).
class ScalingSequence {
 public:
  explicit ScalingSequence(const OffspringLaw& law);
  ScalingMode mode() const { return mode_; }
  double operator()(std::int64_t n) const;

 private:
  OffspringLaw law_;
  ScalingMode mode_;
  double sigma_ = 0.0;
};

// B_n over `ns`, made nondecreasing along increasing n.
std::vector<double> bn_values(const OffspringLaw& law,
                              std::span<const std::int64_t> ns);

}  // namespace looplab

#endif  // LOOPLAB_CONSTANTS_HPP_
