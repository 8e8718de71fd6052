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

#ifndef LOOPLAB_RANDOM_HPP_
#define LOOPLAB_RANDOM_HPP_

#include <cstdint>
#include <limits>
#include <random>

namespace looplab {

// Reproducible generator keyed by (seed, stream). Seeding goes through
// std::seed_seq into std::mt19937_64, both fully specified by the standard;
// conversions to floating point are done here rather than through
// std::uniform_real_distribution, whose output is implementation-defined.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  RandomSource(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  result_type operator()() { return engine_(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }
  // Uniform on {0, ..., n-1}; n > 0.
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }

  // Independent child stream, e.g. one per replicate.
  RandomSource derive(std::uint64_t k) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace looplab

#endif  // LOOPLAB_RANDOM_HPP_
