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

#ifndef LOOPLAB_PARALLEL_HPP_
#define LOOPLAB_PARALLEL_HPP_

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "looplab/random.hpp"

namespace looplab {

// fn(i, src) for i in [0, count), replicate i drawing from base.derive(i).
// Results come back in index order, so the output does not depend on the
// number of threads.
template <class T, class F>
std::vector<T> run_replicates(std::int64_t count, const RandomSource& base,
                              int threads, F&& fn) {
  std::vector<T> out(static_cast<std::size_t>(count));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        RandomSource src = base.derive(static_cast<std::uint64_t>(i));
        out[static_cast<std::size_t>(i)] = fn(i, src);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  if (threads <= 1 || count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const auto n = static_cast<std::int64_t>(threads) < count
                       ? threads
                       : static_cast<int>(count);
    for (int k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace looplab

#endif  // LOOPLAB_PARALLEL_HPP_
