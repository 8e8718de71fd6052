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

#ifndef LOOPLAB_WALK_HPP_
#define LOOPLAB_WALK_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "looplab/discrete_law.hpp"
#include "looplab/offspring_law.hpp"
#include "looplab/random.hpp"

namespace looplab {

// Integer-valued step law X = Y + min_step with Y a DiscreteLaw. Tree mode
// (min_step = -1, X = k - 1 for offspring k) is skip-free downwards.
class WalkLaw {
 public:
  static WalkLaw from_offspring(const OffspringLaw& law);
  // p[i] = P(X = min_step + i).
  static WalkLaw from_table(std::int64_t min_step, std::vector<double> p);
  static WalkLaw from_json(const nlohmann::json& spec);

  std::int64_t min_step() const { return min_step_; }
  bool skip_free() const { return min_step_ == -1; }
  bool finite_support() const {
    return base_.tail_spec().kind == LawTail::Kind::kNone;
  }
  std::int64_t max_step() const;

  double pmf(std::int64_t x) const { return base_.pmf(x - min_step_); }
  // P(X >= x).
  double tail(std::int64_t x) const { return base_.tail(x - min_step_); }
  double mean() const { return base_.mean() + static_cast<double>(min_step_); }
  double gamma() const { return -mean(); }
  double tail_exponent() const { return tail_exponent_; }

  std::int64_t sample(RandomSource& src) const {
    return base_.sample(src) + min_step_;
  }
  std::int64_t sample_at_least(std::int64_t x, RandomSource& src) const {
    return base_.sample_at_least(x - min_step_, src) + min_step_;
  }

  nlohmann::json describe() const { return description_; }

 private:
  DiscreteLaw base_;
  std::int64_t min_step_ = -1;
  double tail_exponent_ = 0.0;
  nlohmann::json description_;
};

inline constexpr std::int64_t kNotYet = -1;

struct WalkPath {
  std::vector<std::int64_t> values;  // W_0 = 0, W_1, ...
  std::int64_t zeta = kNotYet;       // first i >= 1 with W_i < 0

  std::int64_t increment(std::int64_t i) const {
    return values[i] - values[i - 1];
  }
};

// Sets path.zeta from path.values.
void locate_zeta(WalkPath& path);

// h_r(v) = P(W_1, ..., W_r >= 0 | W_0 = v) for a skip-free walk, tabulated
// for r <= max_steps and 0 <= v < r (h_r(v) = 1 when v >= r). Drives exact
// sampling of walks conditioned to survive a fixed number of steps: each
// step is drawn from xi(x) h_r(w + x) / h_{r+1}(w).
class SurvivalTable {
 public:
  SurvivalTable(const WalkLaw& law, std::int64_t max_steps);

  static std::size_t memory_bytes(std::int64_t max_steps);
  static constexpr std::int64_t kMaxRows = 20000;

  const WalkLaw& law() const { return law_; }
  std::int64_t max_steps() const { return max_steps_; }
  double survival(std::int64_t r, std::int64_t v) const;
  // P(zeta >= j) for 1 <= j <= max_steps + 1.
  double zeta_tail(std::int64_t j) const { return survival(j - 1, 0); }

  // Next increment from level w, given W stays >= 0 for r more steps after
  // it (and the new value itself is >= 0). Requires r + 1 <= max_steps.
  std::int64_t conditioned_step(std::int64_t w, std::int64_t r,
                                RandomSource& src) const;

  // Appends W_1..W_m to path.values (starting from path.values.back()),
  // conditioned on W_1, ..., W_{steps} >= 0; only the first m <= steps
  // values are produced.
  void extend_conditioned(WalkPath& path, std::int64_t steps, std::int64_t m,
                          RandomSource& src) const;

 private:
  const double* row(std::int64_t r) const {
    return data_.data() + static_cast<std::size_t>(r) * (r - 1) / 2;
  }

  WalkLaw law_;
  std::int64_t max_steps_;
  std::vector<double> data_;
};

// Tail table P(zeta >= j), j = 1..jmax.
struct ZetaTail {
  std::vector<double> p;           // p[j-1] = P(zeta >= j)
  std::vector<double> half_width;  // CI half-width (0 for exact tables)
  double truncation_bound = 0.0;   // bound on |error| of exact entries
  std::string method;              // "dp", "survival", "monte-carlo"

  std::int64_t jmax() const { return static_cast<std::int64_t>(p.size()); }
  double at(std::int64_t j) const { return p[j - 1]; }
  // sum_j P(zeta >= j) over the table.
  double partial_expectation() const;
};

// Forward dynamic programme over levels [0, cap) with a lumped overflow
// state counted as surviving. Throws kCapTooSmall when the overflow mass at
// jmax exceeds 1e-9.
ZetaTail zeta_tail_dp(const WalkLaw& law, std::int64_t jmax,
                      std::int64_t cap);
ZetaTail zeta_tail_from_survival(const SurvivalTable& table,
                                 std::int64_t jmax);
ZetaTail zeta_tail_monte_carlo(const WalkLaw& law, std::int64_t jmax,
                               std::int64_t paths, RandomSource src);

void write_tail_csv(std::ostream& os, const ZetaTail& t);
ZetaTail read_tail_csv(std::istream& is);

// Free walk of `horizon` steps.
WalkPath sample_free_walk(const WalkLaw& law, std::int64_t horizon,
                          RandomSource& src);

enum class ConditioningMethod { kRejection, kSurvivalTable };

struct ConditionedWalkOptions {
  ConditioningMethod method = ConditioningMethod::kRejection;
  const SurvivalTable* table = nullptr;
  std::int64_t max_attempts = 100'000'000;
  std::int64_t* attempts = nullptr;  // optional out: attempts used
};

// (W_0..W_horizon) under P(. | zeta >= n), i.e. W_1..W_{n-1} >= 0.
WalkPath sample_conditioned_walk(const WalkLaw& law, std::int64_t n,
                                 std::int64_t horizon, RandomSource& src,
                                 const ConditionedWalkOptions& opts = {});

// Z^(n): a prefix of length I-1 conditioned to stay >= 0, one jump >= gamma n,
// then a free walk. I has law P(zeta >= j) / E[zeta] read from the tail
// table; the prefix uses the survival table when given, else rejection.
class CoupledZSampler {
 public:
  CoupledZSampler(WalkLaw law, const ZetaTail* tail,
                  const SurvivalTable* table = nullptr);

  std::int64_t sample_index(RandomSource& src) const;
  WalkPath sample(std::int64_t n, std::int64_t horizon, RandomSource& src,
                  std::int64_t* index = nullptr) const;
  // Mass of the I law lost to the finite table (tree mode only, else 0).
  double index_truncation() const { return index_truncation_; }

 private:
  WalkLaw law_;
  const SurvivalTable* table_;
  std::vector<double> cdf_;
  double index_truncation_ = 0.0;
};

WalkPath sample_coupled_Z(const WalkLaw& law, std::int64_t n,
                          std::int64_t horizon, RandomSource& src,
                          const ZetaTail* tail,
                          const SurvivalTable* table = nullptr);

// True iff exactly one increment among steps 1..n is >= gamma n.
bool check_Gn(const WalkPath& path, std::int64_t n, double gamma);

// Draws the first k increments of one path into `out`.
using IncrementSampler =
    std::function<void(RandomSource&, std::vector<std::int64_t>& out)>;

struct BinScheme {
  std::int64_t window = 10;
  std::int64_t min_value = -1;  // smallest increment bin
  std::int64_t cap = 0;         // increments > cap share one overflow bin
};

// Plug-in TV between the empirical laws of the binned first-k increments.
double windowed_tv(const IncrementSampler& a, const IncrementSampler& b,
                   const BinScheme& bins, std::int64_t samples,
                   RandomSource src_a, RandomSource src_b);

struct FirstPassageSample {
  std::vector<double> grid;     // t values
  std::vector<double> profile;  // W_{floor(n t)} / n
  double zeta_over_n = 0.0;     // first passage below 0, over n
  std::int64_t jump = 0;        // largest increment among steps 1..n
};

// W^(n) continued until it first goes below 0.
FirstPassageSample first_passage_scaling(const WalkLaw& law, std::int64_t n,
                                         RandomSource& src,
                                         const ConditionedWalkOptions& opts);

}  // namespace looplab

#endif  // LOOPLAB_WALK_HPP_
