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

#include "looplab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "looplab/error.hpp"
#include "looplab/plane_tree.hpp"

namespace looplab {

namespace {

// Smallest integer >= gamma n, robust to gamma carrying rounding noise.
std::int64_t jump_threshold(double gamma, std::int64_t n) {
  return static_cast<std::int64_t>(
      std::ceil(gamma * static_cast<double>(n) - 1e-9));
}

}  // namespace

WalkLaw WalkLaw::from_offspring(const OffspringLaw& law) {
  WalkLaw w;
  w.base_ = law.law();
  w.min_step_ = -1;
  w.tail_exponent_ = law.tail_exponent();
  w.description_ = {{"mode", "tree"}, {"offspring", law.describe()}};
  return w;
}

WalkLaw WalkLaw::from_table(std::int64_t min_step, std::vector<double> p) {
  WalkLaw w;
  w.description_ = {{"mode", "free"}, {"min_step", min_step}, {"p", p}};
  w.base_ = DiscreteLaw(std::move(p));
  w.min_step_ = min_step;
  if (std::fabs(w.base_.total_mass() - 1.0) > 1e-12) {
    throw Error(ErrorKind::kInvalidArgument, "step law does not sum to 1");
  }
  return w;
}

WalkLaw WalkLaw::from_json(const nlohmann::json& spec) {
  if (spec.is_object() && spec.value("mode", "") == "free") {
    try {
      return from_table(spec.at("min_step").get<std::int64_t>(),
                        spec.at("p").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kParse, std::string("walk spec: ") + e.what());
    }
  }
  return from_offspring(OffspringLaw::from_json(spec));
}

std::int64_t WalkLaw::max_step() const {
  const std::int64_t m = base_.support_max();
  if (m == std::numeric_limits<std::int64_t>::max()) return m;
  return m + min_step_;
}

void locate_zeta(WalkPath& path) {
  path.zeta = kNotYet;
  for (std::size_t i = 1; i < path.values.size(); ++i) {
    if (path.values[i] < 0) {
      path.zeta = static_cast<std::int64_t>(i);
      return;
    }
  }
}

std::size_t SurvivalTable::memory_bytes(std::int64_t max_steps) {
  const auto r = static_cast<std::size_t>(max_steps);
  return (r + 1) * r / 2 * sizeof(double);
}

SurvivalTable::SurvivalTable(const WalkLaw& law, std::int64_t max_steps)
    : law_(law), max_steps_(max_steps) {
  if (!law.skip_free()) {
    throw Error(ErrorKind::kInvalidArgument,
                "survival table needs steps bounded below by -1");
  }
  if (max_steps < 1 || max_steps > kMaxRows) {
    throw Error(ErrorKind::kTooLarge,
                "survival table rows outside [1, " +
                    std::to_string(kMaxRows) + "]");
  }
  const std::int64_t big = max_steps;
  data_.assign(static_cast<std::size_t>(big + 1) * big / 2, 0.0);
  std::vector<double> xi(static_cast<std::size_t>(big) + 1);
  std::vector<double> xi_tail(static_cast<std::size_t>(big) + 1);
  // xi[x + 1] = P(X = x), xi_tail[a] = P(X >= a), x in [-1, big - 1].
  for (std::int64_t x = -1; x < big; ++x) {
    xi[x + 1] = law.pmf(x);
    xi_tail[x + 1] = law.tail(x);
  }
  for (std::int64_t r = 1; r <= big; ++r) {
    double* cur = data_.data() + static_cast<std::size_t>(r) * (r - 1) / 2;
    const double* prev = row(r - 1);
    for (std::int64_t v = 0; v < r; ++v) cur[v] = xi_tail[r - v];
    const double down = xi[0];
    for (std::int64_t v = 1; v < r; ++v) cur[v] += down * prev[v - 1];
    for (std::int64_t x = 0; x <= r - 2; ++x) {
      const double px = xi[x + 1];
      if (px == 0.0) continue;
      const double* src = prev + x;
      const std::int64_t len = r - 1 - x;
      for (std::int64_t v = 0; v < len; ++v) cur[v] += px * src[v];
    }
  }
}

double SurvivalTable::survival(std::int64_t r, std::int64_t v) const {
  if (v < 0) return 0.0;
  if (v >= r) return 1.0;
  if (r > max_steps_) {
    throw Error(ErrorKind::kTooLarge, "survival table too short");
  }
  return row(r)[v];
}

std::int64_t SurvivalTable::conditioned_step(std::int64_t w, std::int64_t r,
                                             RandomSource& src) const {
  if (w > r) return law_.sample(src);
  if (r + 1 > max_steps_) {
    throw Error(ErrorKind::kTooLarge, "survival table too short");
  }
  const double total = row(r + 1)[w];
  const double u = src.uniform() * total;
  // Same summation order as the table build, so the scan ends by `total`.
  double acc = law_.tail(r - w);
  if (u < acc) return law_.sample_at_least(r - w, src);
  const double* next = row(r);
  std::int64_t last = r - w;
  if (w >= 1) {
    acc += law_.pmf(-1) * next[w - 1];
    if (u < acc) return -1;
  }
  for (std::int64_t x = 0; x <= r - 1 - w; ++x) {
    const double px = law_.pmf(x);
    if (px == 0.0) continue;
    acc += px * next[w + x];
    last = x;
    if (u < acc) return x;
  }
  return last;
}

void SurvivalTable::extend_conditioned(WalkPath& path, std::int64_t steps,
                                       std::int64_t m,
                                       RandomSource& src) const {
  if (steps > max_steps_) {
    throw Error(ErrorKind::kTooLarge, "survival table too short");
  }
  std::int64_t w = path.values.back();
  path.values.reserve(path.values.size() + static_cast<std::size_t>(m));
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t r = steps - i;
    w += r >= 0 ? conditioned_step(w, r, src) : law_.sample(src);
    path.values.push_back(w);
  }
}

double ZetaTail::partial_expectation() const {
  double s = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s += *it;
  return s;
}

ZetaTail zeta_tail_dp(const WalkLaw& law, std::int64_t jmax, std::int64_t cap) {
  if (!law.finite_support()) {
    throw Error(ErrorKind::kInvalidArgument, "DP needs finite step support");
  }
  if (jmax < 1 || cap < 1) {
    throw Error(ErrorKind::kInvalidArgument, "DP needs jmax, cap >= 1");
  }
  const std::int64_t lo = law.min_step();
  const std::int64_t hi = law.max_step();
  std::vector<double> step(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t x = lo; x <= hi; ++x) step[x - lo] = law.pmf(x);

  ZetaTail t;
  t.method = "dp";
  t.p.assign(static_cast<std::size_t>(jmax), 0.0);
  t.half_width.assign(static_cast<std::size_t>(jmax), 0.0);
  std::vector<double> dist(static_cast<std::size_t>(cap), 0.0);
  std::vector<double> next(static_cast<std::size_t>(cap), 0.0);
  dist[0] = 1.0;
  double overflow = 0.0;
  std::int64_t reach = 0;  // dist is zero above reach
  t.p[0] = 1.0;
  for (std::int64_t j = 2; j <= jmax; ++j) {
    std::fill(next.begin(), next.begin() + std::min(cap, reach + hi + 1), 0.0);
    double over = overflow;
    for (std::int64_t w = 0; w <= reach; ++w) {
      const double m = dist[w];
      if (m == 0.0) continue;
      for (std::int64_t x = lo; x <= hi; ++x) {
        const std::int64_t y = w + x;
        if (y < 0) continue;
        const double add = m * step[x - lo];
        if (y >= cap) {
          over += add;
        } else {
          next[y] += add;
        }
      }
    }
    reach = std::min(cap - 1, reach + std::max<std::int64_t>(hi, 0));
    dist.swap(next);
    overflow = over;
    double mass = overflow;
    for (std::int64_t w = reach; w >= 0; --w) mass += dist[w];
    t.p[j - 1] = mass;
  }
  t.truncation_bound = overflow;
  if (overflow > 1e-9) {
    throw Error(ErrorKind::kCapTooSmall,
                "overflow mass " + std::to_string(overflow) + " above 1e-9");
  }
  return t;
}

ZetaTail zeta_tail_from_survival(const SurvivalTable& table, std::int64_t jmax) {
  if (jmax - 1 > table.max_steps()) {
    throw Error(ErrorKind::kTooLarge, "survival table too short");
  }
  ZetaTail t;
  t.method = "survival";
  t.p.resize(static_cast<std::size_t>(jmax));
  t.half_width.assign(static_cast<std::size_t>(jmax), 0.0);
  for (std::int64_t j = 1; j <= jmax; ++j) t.p[j - 1] = table.zeta_tail(j);
  return t;
}

ZetaTail zeta_tail_monte_carlo(const WalkLaw& law, std::int64_t jmax,
                               std::int64_t paths, RandomSource src) {
  // survived[j] counts paths with W_1..W_j >= 0.
  std::vector<std::int64_t> death(static_cast<std::size_t>(jmax) + 1, 0);
  constexpr std::int64_t kBlock = 100'000;
  for (std::int64_t b = 0; b * kBlock < paths; ++b) {
    RandomSource rs = src.derive(static_cast<std::uint64_t>(b));
    const std::int64_t count = std::min(kBlock, paths - b * kBlock);
    for (std::int64_t k = 0; k < count; ++k) {
      std::int64_t w = 0;
      std::int64_t i = 1;
      for (; i < jmax; ++i) {
        w += law.sample(rs);
        if (w < 0) break;
      }
      ++death[i];  // zeta >= j iff j <= i
    }
  }
  ZetaTail t;
  t.method = "monte-carlo";
  t.p.resize(static_cast<std::size_t>(jmax));
  t.half_width.resize(static_cast<std::size_t>(jmax));
  std::int64_t alive = paths;
  constexpr double z = 1.959963984540054;
  const double nn = static_cast<double>(paths);
  for (std::int64_t j = 1; j <= jmax; ++j) {
    if (j >= 2) alive -= death[j - 1];
    const double p = static_cast<double>(alive) / nn;
    t.p[j - 1] = p;
    t.half_width[j - 1] = z / (1.0 + z * z / nn) *
                          std::sqrt(p * (1.0 - p) / nn + z * z / (4 * nn * nn));
  }
  return t;
}

void write_tail_csv(std::ostream& os, const ZetaTail& t) {
  os << "j,p_zeta_ge_j,ci_half_width\n";
  os << std::setprecision(17);
  for (std::int64_t j = 1; j <= t.jmax(); ++j) {
    os << j << ',' << t.p[j - 1] << ',' << t.half_width[j - 1] << '\n';
  }
}

ZetaTail read_tail_csv(std::istream& is) {
  ZetaTail t;
  t.method = "csv";
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::kParse, "empty tail CSV");
  std::int64_t expect = 1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::int64_t j = 0;
    double p = 0, hw = 0;
    char c1 = 0, c2 = 0;
    if (!(ls >> j >> c1 >> p >> c2 >> hw) || c1 != ',' || c2 != ',' ||
        j != expect) {
      throw Error(ErrorKind::kParse, "bad tail CSV row: " + line);
    }
    t.p.push_back(p);
    t.half_width.push_back(hw);
    ++expect;
  }
  return t;
}

WalkPath sample_free_walk(const WalkLaw& law, std::int64_t horizon,
                          RandomSource& src) {
  WalkPath path;
  path.values.resize(static_cast<std::size_t>(horizon) + 1);
  path.values[0] = 0;
  for (std::int64_t i = 1; i <= horizon; ++i) {
    path.values[i] = path.values[i - 1] + law.sample(src);
  }
  locate_zeta(path);
  return path;
}

namespace {

// W_1..W_{steps} >= 0 by rejection; keeps the first m values.
void rejection_prefix(const WalkLaw& law, WalkPath& path, std::int64_t steps,
                      std::int64_t m, RandomSource& src,
                      std::int64_t max_attempts, std::int64_t* attempts_out) {
  const std::size_t base = path.values.size();
  const std::int64_t w0 = path.values.back();
  for (std::int64_t attempt = 1;; ++attempt) {
    if (attempt > max_attempts) {
      throw Error(ErrorKind::kBudgetExhausted,
                  "no path survived " + std::to_string(steps) + " steps in " +
                      std::to_string(max_attempts) + " attempts");
    }
    path.values.resize(base);
    std::int64_t w = w0;
    bool ok = true;
    for (std::int64_t i = 1; i <= steps; ++i) {
      w += law.sample(src);
      if (w < 0) {
        ok = false;
        break;
      }
      if (i <= m) path.values.push_back(w);
    }
    if (ok) {
      if (attempts_out != nullptr) *attempts_out = attempt;
      return;
    }
  }
}

}  // namespace

WalkPath sample_conditioned_walk(const WalkLaw& law, std::int64_t n,
                                 std::int64_t horizon, RandomSource& src,
                                 const ConditionedWalkOptions& opts) {
  if (n < 1 || horizon < n - 1) {
    throw Error(ErrorKind::kInvalidArgument, "need n >= 1, horizon >= n - 1");
  }
  WalkPath path;
  path.values.reserve(static_cast<std::size_t>(horizon) + 1);
  path.values.push_back(0);
  if (opts.method == ConditioningMethod::kSurvivalTable) {
    if (opts.table == nullptr) {
      throw Error(ErrorKind::kInvalidArgument, "survival table not supplied");
    }
    opts.table->extend_conditioned(path, n - 1, n - 1, src);
    if (opts.attempts != nullptr) *opts.attempts = 1;
  } else {
    rejection_prefix(law, path, n - 1, n - 1, src, opts.max_attempts,
                     opts.attempts);
  }
  std::int64_t w = path.values.back();
  for (std::int64_t i = n; i <= horizon; ++i) {
    w += law.sample(src);
    path.values.push_back(w);
  }
  locate_zeta(path);
  return path;
}

CoupledZSampler::CoupledZSampler(WalkLaw law, const ZetaTail* tail,
                                 const SurvivalTable* table)
    : law_(std::move(law)), table_(table) {
  if (tail == nullptr || tail->p.empty()) {
    throw Error(ErrorKind::kTailTableMissing,
                "the index law needs P(zeta >= j)");
  }
  cdf_.resize(tail->p.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < tail->p.size(); ++j) {
    acc += tail->p[j];
    cdf_[j] = acc;
  }
  for (double& c : cdf_) c /= acc;
  if (law_.skip_free()) {
    // E[zeta] = 1 / gamma for skip-free walks (mean tree size).
    index_truncation_ = std::max(0.0, 1.0 - acc * law_.gamma());
  }
}

std::int64_t CoupledZSampler::sample_index(RandomSource& src) const {
  const double u = src.uniform();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto j = static_cast<std::int64_t>(it - cdf_.begin()) + 1;
  return std::min<std::int64_t>(j, static_cast<std::int64_t>(cdf_.size()));
}

WalkPath CoupledZSampler::sample(std::int64_t n, std::int64_t horizon,
                                 RandomSource& src, std::int64_t* index) const {
  const std::int64_t big = sample_index(src);
  if (index != nullptr) *index = big;
  WalkPath path;
  path.values.reserve(static_cast<std::size_t>(horizon) + 1);
  path.values.push_back(0);
  const std::int64_t keep = std::min(big - 1, horizon);
  if (table_ != nullptr && table_->max_steps() >= big - 1) {
    table_->extend_conditioned(path, big - 1, keep, src);
  } else {
    rejection_prefix(law_, path, big - 1, keep, src,
                     std::numeric_limits<std::int64_t>::max(), nullptr);
  }
  if (big <= horizon) {
    std::int64_t w = path.values.back();
    w += law_.sample_at_least(jump_threshold(law_.gamma(), n), src);
    path.values.push_back(w);
    for (std::int64_t i = big + 1; i <= horizon; ++i) {
      w += law_.sample(src);
      path.values.push_back(w);
    }
  }
  locate_zeta(path);
  return path;
}

WalkPath sample_coupled_Z(const WalkLaw& law, std::int64_t n,
                          std::int64_t horizon, RandomSource& src,
                          const ZetaTail* tail, const SurvivalTable* table) {
  return CoupledZSampler(law, tail, table).sample(n, horizon, src);
}

bool check_Gn(const WalkPath& path, std::int64_t n, double gamma) {
  if (static_cast<std::int64_t>(path.values.size()) < n + 1) {
    throw Error(ErrorKind::kInvalidArgument, "path shorter than n");
  }
  const std::int64_t threshold = jump_threshold(gamma, n);
  int count = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (path.increment(i) >= threshold && ++count > 1) return false;
  }
  return count == 1;
}

double windowed_tv(const IncrementSampler& a, const IncrementSampler& b,
                   const BinScheme& bins, std::int64_t samples,
                   RandomSource src_a, RandomSource src_b) {
  const auto base = static_cast<std::uint64_t>(bins.cap - bins.min_value + 2);
  long double cells = 1.0L;
  for (std::int64_t i = 0; i < bins.window; ++i) cells *= base;
  if (cells > 1.8e19L) {
    throw Error(ErrorKind::kTooLarge, "bin scheme too fine for the window");
  }
  auto collect = [&](const IncrementSampler& s, RandomSource& src) {
    std::vector<std::uint64_t> keys(static_cast<std::size_t>(samples));
    std::vector<std::int64_t> buf;
    for (auto& key : keys) {
      buf.clear();
      s(src, buf);
      std::uint64_t k = 0;
      for (std::int64_t i = 0; i < bins.window; ++i) {
        const std::int64_t x = buf[i];
        const std::int64_t bin =
            x > bins.cap ? bins.cap - bins.min_value + 1
                         : std::max<std::int64_t>(x, bins.min_value) -
                               bins.min_value;
        k = k * base + static_cast<std::uint64_t>(bin);
      }
      key = k;
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  const std::vector<std::uint64_t> ka = collect(a, src_a);
  const std::vector<std::uint64_t> kb = collect(b, src_b);
  std::size_t i = 0, j = 0;
  std::int64_t diff = 0;
  while (i < ka.size() || j < kb.size()) {
    std::uint64_t key;
    if (j == kb.size() || (i < ka.size() && ka[i] < kb[j])) {
      key = ka[i];
    } else {
      key = kb[j];
    }
    std::int64_t ca = 0, cb = 0;
    while (i < ka.size() && ka[i] == key) ++ca, ++i;
    while (j < kb.size() && kb[j] == key) ++cb, ++j;
    diff += std::abs(ca - cb);
  }
  return 0.5 * static_cast<double>(diff) / static_cast<double>(samples);
}

FirstPassageSample first_passage_scaling(const WalkLaw& law, std::int64_t n,
                                         RandomSource& src,
                                         const ConditionedWalkOptions& opts) {
  WalkPath path = sample_conditioned_walk(law, n, n - 1, src, opts);
  std::int64_t w = path.values.back();
  const std::int64_t until = 2 * n;
  while (static_cast<std::int64_t>(path.values.size()) <= until || w >= 0) {
    w += law.sample(src);
    path.values.push_back(w);
    if (static_cast<std::int64_t>(path.values.size()) > kMaxVertices) {
      throw Error(ErrorKind::kTreeTooLarge, "first passage beyond the cap");
    }
  }
  locate_zeta(path);
  FirstPassageSample out;
  const double nn = static_cast<double>(n);
  for (int k = 0; k <= 40; ++k) {
    const double t = k / 20.0;
    out.grid.push_back(t);
    out.profile.push_back(
        static_cast<double>(path.values[static_cast<std::size_t>(t * nn)]) / nn);
  }
  out.zeta_over_n = static_cast<double>(path.zeta) / nn;
  for (std::int64_t i = 1; i <= n && i < static_cast<std::int64_t>(path.values.size()); ++i) {
    out.jump = std::max(out.jump, path.increment(i));
  }
  return out;
}

}  // namespace looplab
