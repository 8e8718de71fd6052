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

#ifndef LOOPLAB_STATS_HPP_
#define LOOPLAB_STATS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace looplab {

// Weighted empirical law; values sorted ascending, weights sum to 1.
class EmpiricalLaw {
 public:
  EmpiricalLaw() = default;
  static EmpiricalLaw from_samples(std::vector<double> samples);
  static EmpiricalLaw from_weighted(std::vector<double> values,
                                    std::vector<double> weights);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const double> values() const { return values_; }
  std::span<const double> weights() const { return weights_; }

  double mean() const;
  // Lower q-quantile: smallest x with F(x) >= q.
  double quantile(double q) const;
  double median() const { return quantile(0.5); }
  double cdf(double x) const;

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

struct MeanEstimate {
  double mean = 0.0;
  double se = 0.0;
  std::int64_t count = 0;
};
MeanEstimate mean_and_se(std::span<const double> x);

// sup_x |F_n(x) - F(x)| for a continuous F.
double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf);
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic P(D > d) with the effective-size correction of Stephens.
double kolmogorov_pvalue(double d, double effective_n);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};
Interval wilson_interval(std::int64_t successes, std::int64_t trials,
                         double z = 1.959963984540054);

// True iff x is strictly decreasing.
bool strictly_decreasing(std::span<const double> x);

}  // namespace looplab

#endif  // LOOPLAB_STATS_HPP_
