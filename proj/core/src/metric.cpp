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

#include "looplab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "looplab/error.hpp"

namespace looplab {

MetricSample MetricSample::from_matrix(std::vector<std::vector<double>> d) {
  for (const auto& row : d) {
    if (row.size() != d.size()) {
      throw Error(ErrorKind::kInvalidArgument, "distance matrix not square");
    }
  }
  MetricSample m;
  m.ids_.resize(d.size());
  std::iota(m.ids_.begin(), m.ids_.end(), 0);
  m.matrix_ = std::move(d);
  return m;
}

MetricSample MetricSample::from_pairs(std::vector<std::int64_t> ids,
                                      std::vector<Pair> pairs) {
  MetricSample m;
  m.ids_ = std::move(ids);
  m.pairs_ = std::move(pairs);
  return m;
}

bool MetricSample::is_metric(double tol) const {
  const std::size_t n = matrix_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(matrix_[i][i]) > tol) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_[i][j] < -tol) return false;
      if (std::fabs(matrix_[i][j] - matrix_[j][i]) > tol) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (matrix_[i][k] > matrix_[i][j] + matrix_[j][k] + tol) return false;
      }
    }
  }
  for (const Pair& p : pairs_) {
    if (p.d < -tol) return false;
  }
  return true;
}

namespace {

struct GhSearch {
  const MetricSample& a;
  const MetricSample& b;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::vector<int> covered;
  double best = std::numeric_limits<double>::infinity();

  // Largest distortion the pair (x, y) adds against the current relation.
  double added(std::size_t x, std::size_t y) const {
    double d = 0.0;
    for (const auto& [u, v] : rel) {
      d = std::max(d, std::fabs(a.d(x, u) - b.d(y, v)));
    }
    return d;
  }

  // Partners for uncovered points of B, in index order.
  void cover(std::size_t y, double dis) {
    while (y < b.size() && covered[y] > 0) ++y;
    if (y == b.size()) {
      best = std::min(best, dis);
      return;
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
      const double d = std::max(dis, added(x, y));
      if (d >= best) continue;
      rel.emplace_back(x, y);
      ++covered[y];
      cover(y + 1, d);
      --covered[y];
      rel.pop_back();
    }
  }

  // One image for every point of A.
  void assign(std::size_t x, double dis) {
    if (x == a.size()) {
      cover(0, dis);
      return;
    }
    for (std::size_t y = 0; y < b.size(); ++y) {
      const double d = std::max(dis, added(x, y));
      if (d >= best) continue;
      rel.emplace_back(x, y);
      ++covered[y];
      assign(x + 1, d);
      --covered[y];
      rel.pop_back();
    }
  }
};

}  // namespace

double gh_exact_small(const MetricSample& a, const MetricSample& b) {
  if (!a.has_matrix() || !b.has_matrix()) {
    throw Error(ErrorKind::kInvalidArgument, "exact GH needs full matrices");
  }
  if (a.size() > kMaxGhPoints || b.size() > kMaxGhPoints) {
    throw Error(ErrorKind::kTooLarge, "exact GH limited to 7 points");
  }
  if (a.size() == 0 || b.size() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "empty metric space");
  }
  GhSearch s{a, b, {}, std::vector<int>(b.size(), 0)};
  s.assign(0, 0.0);
  return s.best / 2.0;
}

}  // namespace looplab
