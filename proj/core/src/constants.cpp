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

#include "looplab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "looplab/error.hpp"

namespace looplab {

void require_critical(const OffspringLaw& law) {
  if (std::fabs(law.mean() - 1.0) > kCriticalTolerance) {
    throw Error(ErrorKind::kNotCritical,
                "law mean " + std::to_string(law.mean()) + " is not 1");
  }
}

double c_mu(const OffspringLaw& law) {
  require_critical(law);
  const double s2 = law.variance();
  if (!std::isfinite(s2)) return 0.5;
  return 0.25 * (s2 + 4.0 - law.law().even_mass());
}

double c_bar_mu(const OffspringLaw& law) {
  require_critical(law);
  const double s2 = law.variance();
  if (!std::isfinite(s2)) {
    throw Error(ErrorKind::kInvalidArgument,
                "contracted constant needs finite variance");
  }
  return 0.25 * (s2 + law.law().even_mass());
}

namespace {

MeanEstimate spine_oracle(const OffspringLaw& law, std::int64_t draws,
                          RandomSource src, int plus) {
  require_critical(law);
  const DiscreteLaw star = size_biased(law);
  std::vector<double> x(static_cast<std::size_t>(draws));
  for (auto& v : x) {
    const std::int64_t k = star.sample(src);
    const std::int64_t u = 1 + static_cast<std::int64_t>(
                                   src.below(static_cast<std::uint64_t>(k)));
    v = static_cast<double>(std::min(u, k - u + plus));
  }
  return mean_and_se(x);
}

double spine_exact(const OffspringLaw& law, int plus) {
  require_critical(law);
  if (!law.finite_support()) {
    throw Error(ErrorKind::kInvalidArgument, "exact sum needs finite support");
  }
  double s = 0.0;
  for (std::int64_t k = 1; k <= law.support_max(); ++k) {
    // mu*(k) * (1/k) summed over u.
    std::int64_t m = 0;
    for (std::int64_t u = 1; u <= k; ++u) m += std::min(u, k - u + plus);
    s += law.pmf(k) * static_cast<double>(m);
  }
  return s;
}

}  // namespace

MeanEstimate c_mu_oracle(const OffspringLaw& law, std::int64_t draws,
                         RandomSource src) {
  return spine_oracle(law, draws, src, 1);
}

MeanEstimate c_bar_mu_oracle(const OffspringLaw& law, std::int64_t draws,
                             RandomSource src) {
  return spine_oracle(law, draws, src, 0);
}

double c_mu_exact_sum(const OffspringLaw& law) { return spine_exact(law, 1); }
double c_bar_mu_exact_sum(const OffspringLaw& law) {
  return spine_exact(law, 0);
}

ScalingSequence::ScalingSequence(const OffspringLaw& law) : law_(law) {
  require_critical(law);
  const double s2 = law.variance();
  if (std::isfinite(s2)) {
    mode_ = ScalingMode::kFiniteVariance;
    sigma_ = std::sqrt(s2);
  } else {
    mode_ = ScalingMode::kInfiniteVariance;
  }
}

double ScalingSequence::operator()(std::int64_t n) const {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "n must be >= 1");
  const double nn = static_cast<double>(n);
  if (mode_ == ScalingMode::kFiniteVariance) return sigma_ * std::sqrt(nn / 2.0);
  const DiscreteLaw& law = law_.law();
  auto ok = [&](double b) {
    const auto m = static_cast<std::int64_t>(std::floor(b));
    const double m1 = law.truncated_moment(1, m);
    const double v = law.truncated_moment(2, m) - m1 * m1;
    return nn * v <= 2.0 * b * b;
  };
  double lo = 1.0;
  if (ok(lo)) return lo;
  double hi = 2.0;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<double> bn_values(const OffspringLaw& law,
                              std::span<const std::int64_t> ns) {
  const ScalingSequence b(law);
  std::vector<std::size_t> order(ns.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return ns[x] < ns[y]; });
  std::vector<double> out(ns.size());
  double running = 0.0;
  for (std::size_t i : order) {
    running = std::max(running, b(ns[i]));
    out[i] = running;
  }
  return out;
}

}  // namespace looplab
