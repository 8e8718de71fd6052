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

#ifndef LOOPLAB_ALIAS_TABLE_HPP_
#define LOOPLAB_ALIAS_TABLE_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "looplab/random.hpp"

namespace looplab {

// Walker/Vose alias table over {0, ..., size-1}.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return prob_.size(); }
  std::size_t sample(RandomSource& src) const {
    const double u = src.uniform() * static_cast<double>(prob_.size());
    const std::size_t i =
        std::min(static_cast<std::size_t>(u), prob_.size() - 1);
    return (u - static_cast<double>(i)) < prob_[i] ? i : alias_[i];
  }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace looplab

#endif  // LOOPLAB_ALIAS_TABLE_HPP_
