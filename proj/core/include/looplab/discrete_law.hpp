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

#ifndef LOOPLAB_DISCRETE_LAW_HPP_
#define LOOPLAB_DISCRETE_LAW_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "looplab/alias_table.hpp"
#include "looplab/random.hpp"

namespace looplab {

// Hurwitz zeta sum_{k>=0} (q+k)^{-s}, s > 1, q > 0 (Euler-Maclaurin).
double hurwitz_zeta(double s, double q);

// Closed-form description of the mass beyond a tabulated head.
struct LawTail {
  enum class Kind { kNone, kGeometric, kPowerLaw };
  Kind kind = Kind::kNone;
  // kGeometric: p(i) = scale * ratio^i for every i past the head.
  // kPowerLaw: p(stride * k) = scale * k^{-exponent} for k >= first_k, and
  // zero elsewhere past the head; stride * first_k must exceed the head.
  double scale = 0.0;
  double ratio = 0.0;
  double exponent = 0.0;
  std::int64_t stride = 1;
  std::int64_t first_k = 0;
};

// Probability law on the non-negative integers: a table p(0..K) plus an
// optional analytic tail. Sampling is exact for both parts (alias table for
// the head, inversion or rejection for the tail).
class DiscreteLaw {
 public:
  DiscreteLaw() = default;
  DiscreteLaw(std::vector<double> head, LawTail tail = {});

  std::int64_t head_size() const {
    return static_cast<std::int64_t>(head_.size());
  }
  std::span<const double> head() const { return head_; }
  const LawTail& tail_spec() const { return tail_; }
  double tail_mass() const { return tail_mass_; }

  double pmf(std::int64_t i) const;
  // P(X >= i).
  double tail(std::int64_t i) const;
  double total_mass() const { return suffix_.empty() ? 0.0 : suffix_[0]; }

  // Infinite moments are reported as +inf.
  double mean() const;
  double second_moment() const;
  double even_mass() const;
  // E[X^order 1{X <= m}] for order in {1, 2}.
  double truncated_moment(int order, std::int64_t m) const;

  // Largest atom, or INT64_MAX when the tail is unbounded.
  std::int64_t support_max() const;

  std::int64_t sample(RandomSource& src) const;
  // Sample from the law conditioned on X >= a (requires P(X >= a) > 0).
  std::int64_t sample_at_least(std::int64_t a, RandomSource& src) const;

 private:
  std::int64_t sample_tail_from(std::int64_t a, RandomSource& src) const;
  double tail_moment(int order) const;

  std::vector<double> head_;
  std::vector<double> suffix_;  // suffix_[i] = P(X >= i), i <= K+1
  LawTail tail_;
  double tail_mass_ = 0.0;
  AliasTable alias_;
};

}  // namespace looplab

#endif  // LOOPLAB_DISCRETE_LAW_HPP_
