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

#ifndef LOOPLAB_CONVOLUTION_HPP_
#define LOOPLAB_CONVOLUTION_HPP_

#include <cstdint>
#include <vector>

#include "looplab/offspring_law.hpp"

namespace looplab {

// Law of W_n = sum of n increments k_i - 1, stored as the law of
// S_n = W_n + n. Entries are lower bounds on the exact probabilities and
// each is within truncation_bound of it.
struct Phi {
  std::int64_t n = 0;
  std::int64_t offset = 0;  // p[i] = P(S_n = offset + i)
  std::vector<double> p;
  double truncation_bound = 0.0;

  // P(W_n = -j).
  double at(std::int64_t j) const {
    const std::int64_t i = n - j - offset;
    if (i < 0 || i >= static_cast<std::int64_t>(p.size())) return 0.0;
    return p[static_cast<std::size_t>(i)];
  }
  // Range of j with a stored entry: [min_j(), max_j()].
  std::int64_t min_j() const {
    return n - offset - static_cast<std::int64_t>(p.size()) + 1;
  }
  std::int64_t max_j() const { return n - offset; }
  double total() const;
};

// Exact convolution power by repeated squaring; tails below 1e-17 are
// trimmed after each product and counted in the bound. `cap` limits the
// stored width. Throws kCapTooSmall when the bound exceeds `tolerance`.
Phi phi(const OffspringLaw& law, std::int64_t n, std::int64_t cap = 1 << 22,
        double tolerance = 1e-12);

}  // namespace looplab

#endif  // LOOPLAB_CONVOLUTION_HPP_
