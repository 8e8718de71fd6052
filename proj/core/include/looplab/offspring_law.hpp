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

#ifndef LOOPLAB_OFFSPRING_LAW_HPP_
#define LOOPLAB_OFFSPRING_LAW_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "looplab/discrete_law.hpp"

namespace looplab {

enum class LawKind {
  kFiniteTable,
  kGeometric,
  kHeavyTail,
  kCriticalInfVar,
  kPathologicalEvenOdd,
};

// Offspring distribution of a branching process, with the moment and tail
// metadata the experiments need.
class OffspringLaw {
 public:
  // p(0..K); must sum to 1 within 1e-12, with p(0) > 0 and p(0)+p(1) < 1.
  static OffspringLaw finite_table(std::vector<double> p);
  // mu(k) = p (1-p)^k.
  static OffspringLaw geometric(double p);
  // mu(i) = c i^{-beta-1} for i >= 1, mean = target_mean < 1.
  static OffspringLaw heavy_tail(double beta, double target_mean);
  // mu(i) = c i^{-3} for i >= 1, mean 1, infinite variance.
  static OffspringLaw critical_inf_var();
  // mu(2k) = s k^{-beta-1} (k >= 1), mu(2k+1) = s e^{-k} (k >= 0).
  static OffspringLaw pathological_even_odd(double beta, double target_mean);

  // Presets: "binary", "geometric", "geometric-truncated", "critical-3pt",
  // "heavy", "critical-inf-var".
  static OffspringLaw preset(const std::string& name);
  // {"kind": ..., params...}; "kind" may also name a preset.
  static OffspringLaw from_json(const nlohmann::json& spec);

  LawKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const DiscreteLaw& law() const { return law_; }

  double pmf(std::int64_t k) const { return law_.pmf(k); }
  double tail(std::int64_t k) const { return law_.tail(k); }
  double mean() const { return mean_; }
  // +inf when infinite.
  double variance() const { return variance_; }
  // beta where the tail is regularly varying, else 0.
  double tail_exponent() const { return tail_exponent_; }
  bool finite_support() const {
    return law_.tail_spec().kind == LawTail::Kind::kNone;
  }
  std::int64_t support_max() const { return law_.support_max(); }
  bool is_critical() const;
  // Largest deviation of the total mass from 1 tolerated at construction.
  static constexpr double kMassTolerance = 1e-12;

  std::int64_t sample(RandomSource& src) const { return law_.sample(src); }

  // Specification plus solved constants, for output metadata.
  nlohmann::json describe() const;

 private:
  OffspringLaw(LawKind kind, std::string name, DiscreteLaw law,
               nlohmann::json params);
  void validate() const;

  LawKind kind_ = LawKind::kFiniteTable;
  std::string name_;
  DiscreteLaw law_;
  nlohmann::json params_;
  double mean_ = 0.0;
  double variance_ = 0.0;
  double tail_exponent_ = 0.0;
};

// mu*(j) = j mu(j) / m.
DiscreteLaw size_biased(const OffspringLaw& law);

}  // namespace looplab

#endif  // LOOPLAB_OFFSPRING_LAW_HPP_
