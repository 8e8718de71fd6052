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

#include "looplab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "looplab/error.hpp"

namespace looplab {

EmpiricalLaw EmpiricalLaw::from_samples(std::vector<double> samples) {
  std::vector<double> w(samples.size(),
                        samples.empty() ? 0.0 : 1.0 / samples.size());
  return from_weighted(std::move(samples), std::move(w));
}

EmpiricalLaw EmpiricalLaw::from_weighted(std::vector<double> values,
                                         std::vector<double> weights) {
  if (values.size() != weights.size()) {
    throw Error(ErrorKind::kInvalidArgument, "values and weights differ");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  EmpiricalLaw e;
  e.values_.reserve(values.size());
  e.weights_.reserve(values.size());
  double acc = 0.0;
  for (std::size_t i : order) {
    e.values_.push_back(values[i]);
    e.weights_.push_back(weights[i] / total);
    acc += weights[i] / total;
    e.cumulative_.push_back(acc);
  }
  return e;
}

double EmpiricalLaw::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * weights_[i];
  return s;
}

double EmpiricalLaw::quantile(double q) const {
  if (values_.empty()) throw Error(ErrorKind::kInvalidArgument, "empty law");
  const double target = q * cumulative_.back() * (1.0 - 1e-12);
  const auto it =
      std::lower_bound(cumulative_.begin(), cumulative_.end(), target);
  const auto i = static_cast<std::size_t>(it - cumulative_.begin());
  return values_[std::min(i, values_.size() - 1)];
}

double EmpiricalLaw::cdf(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  if (it == values_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

MeanEstimate mean_and_se(std::span<const double> x) {
  MeanEstimate m;
  m.count = static_cast<std::int64_t>(x.size());
  if (x.empty()) return m;
  // Welford.
  double mean = 0.0, m2 = 0.0;
  std::int64_t k = 0;
  for (double v : x) {
    ++k;
    const double d = v - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (v - mean);
  }
  m.mean = mean;
  if (k > 1) {
    m.se = std::sqrt(m2 / static_cast<double>(k - 1) / static_cast<double>(k));
  }
  return m;
}

double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf) {
  if (samples.empty()) throw Error(ErrorKind::kInvalidArgument, "no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f,
                  f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no samples");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

double kolmogorov_pvalue(double d, double effective_n) {
  const double sn = std::sqrt(effective_n);
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

Interval wilson_interval(std::int64_t successes, std::int64_t trials,
                         double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half =
      z / denom * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
  const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

bool strictly_decreasing(std::span<const double> x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] < x[i - 1])) return false;
  }
  return true;
}

}  // namespace looplab
