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

#ifndef LOOPLAB_METRIC_HPP_
#define LOOPLAB_METRIC_HPP_

#include <cstdint>
#include <vector>

namespace looplab {

inline constexpr std::size_t kMaxGhPoints = 7;

// Finite metric space: a full distance matrix for small spaces, or
// distances on sampled pairs for large ones.
class MetricSample {
 public:
  struct Pair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    double d = 0.0;
  };

  static MetricSample from_matrix(std::vector<std::vector<double>> d);
  static MetricSample from_pairs(std::vector<std::int64_t> ids,
                                 std::vector<Pair> pairs);

  bool has_matrix() const { return !matrix_.empty(); }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::int64_t>& ids() const { return ids_; }
  double d(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  // Symmetry, zero diagonal and the triangle inequality (matrix form),
  // each within `tol`.
  bool is_metric(double tol = 1e-12) const;

 private:
  std::vector<std::int64_t> ids_;
  std::vector<std::vector<double>> matrix_;
  std::vector<Pair> pairs_;
};

// Half the smallest distortion over all correspondences; exhaustive with
// branch and bound. Throws kTooLarge past kMaxGhPoints points.
double gh_exact_small(const MetricSample& a, const MetricSample& b);

}  // namespace looplab

#endif  // LOOPLAB_METRIC_HPP_
