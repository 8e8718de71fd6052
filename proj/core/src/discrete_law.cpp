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

#include "looplab/discrete_law.hpp"

#include <cmath>
#include <limits>

#include "looplab/error.hpp"

namespace looplab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a <= 0 ? 0 : (a + b - 1) / b;
}

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "hurwitz_zeta domain");
  }
  // B_{2j} / (2j)!
  static constexpr double kB[] = {
      1.0 / 12.0,          -1.0 / 720.0,        1.0 / 30240.0,
      -1.0 / 1209600.0,    1.0 / 47900160.0,    -691.0 / 1307674368000.0,
      1.0 / 74724249600.0, -3617.0 / 10670622842880000.0};
  constexpr int kDirect = 12;
  double sum = 0.0;
  // Direct terms only matter when q is small.
  int direct = q < kDirect ? kDirect : 0;
  for (int k = direct - 1; k >= 0; --k) sum += std::pow(q + k, -s);
  const double x = q + direct;
  double tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  double rising = s;  // s (s+1) ... (s+2j-2)
  double xpow = std::pow(x, -s - 1.0);
  for (int j = 0; j < 8; ++j) {
    const double term = kB[j] * rising * xpow;
    tail += term;
    if (std::fabs(term) < 1e-18 * std::fabs(tail)) break;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    xpow /= x * x;
  }
  return sum + tail;
}

DiscreteLaw::DiscreteLaw(std::vector<double> head, LawTail tail)
    : head_(std::move(head)), tail_(tail) {
  if (head_.empty()) throw Error(ErrorKind::kInvalidArgument, "empty law");
  for (double p : head_) {
    if (!(p >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "negative mass");
  }
  const std::int64_t k = head_size();
  switch (tail_.kind) {
    case LawTail::Kind::kNone:
      tail_mass_ = 0.0;
      break;
    case LawTail::Kind::kGeometric:
      tail_mass_ = tail_.scale * std::pow(tail_.ratio, static_cast<double>(k)) /
                   (1.0 - tail_.ratio);
      break;
    case LawTail::Kind::kPowerLaw:
      if (tail_.stride * tail_.first_k < k || tail_.exponent <= 1.0) {
        throw Error(ErrorKind::kInvalidArgument, "power tail overlaps head");
      }
      tail_mass_ = tail_.scale *
                   hurwitz_zeta(tail_.exponent,
                                static_cast<double>(tail_.first_k));
      break;
  }
  suffix_.assign(static_cast<std::size_t>(k) + 1, 0.0);
  suffix_[k] = tail_mass_;
  for (std::int64_t i = k - 1; i >= 0; --i) suffix_[i] = suffix_[i + 1] + head_[i];

  std::vector<double> w(head_);
  w.push_back(tail_mass_);
  alias_ = AliasTable(w);
}

double DiscreteLaw::pmf(std::int64_t i) const {
  if (i < 0) return 0.0;
  if (i < head_size()) return head_[i];
  switch (tail_.kind) {
    case LawTail::Kind::kNone:
      return 0.0;
    case LawTail::Kind::kGeometric:
      return tail_.scale * std::pow(tail_.ratio, static_cast<double>(i));
    case LawTail::Kind::kPowerLaw:
      if (i % tail_.stride != 0) return 0.0;
      return tail_.scale *
             std::pow(static_cast<double>(i / tail_.stride), -tail_.exponent);
  }
  return 0.0;
}

double DiscreteLaw::tail(std::int64_t i) const {
  if (i <= 0) return suffix_[0];
  if (i <= head_size()) return suffix_[i];
  switch (tail_.kind) {
    case LawTail::Kind::kNone:
      return 0.0;
    case LawTail::Kind::kGeometric:
      return tail_.scale * std::pow(tail_.ratio, static_cast<double>(i)) /
             (1.0 - tail_.ratio);
    case LawTail::Kind::kPowerLaw:
      return tail_.scale *
             hurwitz_zeta(tail_.exponent,
                          static_cast<double>(ceil_div(i, tail_.stride)));
  }
  return 0.0;
}

double DiscreteLaw::tail_moment(int order) const {
  switch (tail_.kind) {
    case LawTail::Kind::kNone:
      return 0.0;
    case LawTail::Kind::kGeometric: {
      double s = 0.0;
      for (std::int64_t i = head_size();; ++i) {
        const double term = std::pow(static_cast<double>(i), order) * pmf(i);
        s += term;
        if (term < 1e-30 * (s + 1e-300) || term == 0.0) break;
      }
      return s;
    }
    case LawTail::Kind::kPowerLaw: {
      const double e = tail_.exponent - order;
      if (e <= 1.0) return kInf;
      return tail_.scale * std::pow(static_cast<double>(tail_.stride), order) *
             hurwitz_zeta(e, static_cast<double>(tail_.first_k));
    }
  }
  return 0.0;
}

double DiscreteLaw::mean() const {
  double s = 0.0;
  for (std::int64_t i = head_size() - 1; i > 0; --i) s += i * head_[i];
  return s + tail_moment(1);
}

double DiscreteLaw::second_moment() const {
  double s = 0.0;
  for (std::int64_t i = head_size() - 1; i > 0; --i) {
    s += static_cast<double>(i) * static_cast<double>(i) * head_[i];
  }
  return s + tail_moment(2);
}

double DiscreteLaw::even_mass() const {
  double s = 0.0;
  for (std::int64_t i = 0; i < head_size(); i += 2) s += head_[i];
  const std::int64_t k = head_size();
  switch (tail_.kind) {
    case LawTail::Kind::kNone:
      break;
    case LawTail::Kind::kGeometric: {
      const std::int64_t first = k % 2 == 0 ? k : k + 1;
      s += tail_.scale * std::pow(tail_.ratio, static_cast<double>(first)) /
           (1.0 - tail_.ratio * tail_.ratio);
      break;
    }
    case LawTail::Kind::kPowerLaw:
      if (tail_.stride % 2 == 0) {
        s += tail_mass_;
      } else if (tail_.stride == 1) {
        s += tail_.scale * std::pow(2.0, -tail_.exponent) *
             hurwitz_zeta(tail_.exponent,
                          static_cast<double>(ceil_div(tail_.first_k, 2)));
      } else {
        throw Error(ErrorKind::kInvalidArgument, "odd tail stride");
      }
      break;
  }
  return s;
}

double DiscreteLaw::truncated_moment(int order, std::int64_t m) const {
  double s = 0.0;
  const std::int64_t top = std::min(m, head_size() - 1);
  for (std::int64_t i = top; i > 0; --i) {
    s += std::pow(static_cast<double>(i), order) * head_[i];
  }
  for (std::int64_t i = m; i >= head_size(); --i) {
    s += std::pow(static_cast<double>(i), order) * pmf(i);
  }
  return s;
}

std::int64_t DiscreteLaw::support_max() const {
  if (tail_.kind != LawTail::Kind::kNone) {
    return std::numeric_limits<std::int64_t>::max();
  }
  for (std::int64_t i = head_size() - 1; i >= 0; --i) {
    if (head_[i] > 0.0) return i;
  }
  return 0;
}

std::int64_t DiscreteLaw::sample(RandomSource& src) const {
  const std::size_t j = alias_.sample(src);
  if (static_cast<std::int64_t>(j) < head_size()) {
    return static_cast<std::int64_t>(j);
  }
  return sample_tail_from(head_size(), src);
}

std::int64_t DiscreteLaw::sample_at_least(std::int64_t a,
                                          RandomSource& src) const {
  if (a <= 0) return sample(src);
  const std::int64_t k = head_size();
  if (a >= k) return sample_tail_from(a, src);
  const double u = src.uniform() * suffix_[a];
  if (u < tail_mass_) return sample_tail_from(k, src);
  // suffix_[lo] > u >= suffix_[hi]
  std::int64_t lo = a;
  std::int64_t hi = k;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (suffix_[mid] > u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::int64_t DiscreteLaw::sample_tail_from(std::int64_t a,
                                           RandomSource& src) const {
  switch (tail_.kind) {
    case LawTail::Kind::kNone:
      throw Error(ErrorKind::kInvalidArgument, "no mass at or beyond threshold");
    case LawTail::Kind::kGeometric: {
      const double g = std::floor(std::log(src.uniform_pos()) /
                                  std::log(tail_.ratio));
      return a + static_cast<std::int64_t>(g);
    }
    case LawTail::Kind::kPowerLaw: {
      // Discrete Pareto by rejection from the continuous one on [k0, inf).
      const std::int64_t k0 =
          std::max(tail_.first_k, ceil_div(a, tail_.stride));
      const double e = tail_.exponent;
      const double bound = std::pow(1.0 + 1.0 / static_cast<double>(k0), e);
      constexpr double kLimit = 0x1.0p62;
      for (;;) {
        const double y = static_cast<double>(k0) *
                         std::pow(src.uniform_pos(), -1.0 / (e - 1.0));
        if (y >= kLimit) continue;
        const double k = std::floor(y);
        const double cell =
            std::pow(k, 1.0 - e) * -std::expm1((1.0 - e) * std::log1p(1.0 / k)) /
            (e - 1.0);
        if (src.uniform() * bound * cell <= std::pow(k, -e)) {
          return tail_.stride * static_cast<std::int64_t>(k);
        }
      }
    }
  }
  return a;
}

}  // namespace looplab
