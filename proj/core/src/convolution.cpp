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

#include "looplab/convolution.hpp"

#include <algorithm>
#include <numeric>

#include "looplab/error.hpp"

namespace looplab {

namespace {

constexpr double kTrim = 1e-17;

struct Dist {
  std::int64_t offset = 0;
  std::vector<double> p;
  double err = 0.0;
};

void trim(Dist& d, std::int64_t cap) {
  std::size_t lo = 0, hi = d.p.size();
  double cut = 0.0;
  while (hi - lo > 1 && cut + d.p[lo] <= kTrim) cut += d.p[lo++];
  double cut_hi = 0.0;
  while (hi - lo > 1 && cut_hi + d.p[hi - 1] <= kTrim) cut_hi += d.p[--hi];
  while (static_cast<std::int64_t>(hi - lo) > cap) {
    if (d.p[lo] <= d.p[hi - 1]) {
      cut += d.p[lo++];
    } else {
      cut_hi += d.p[--hi];
    }
  }
  if (lo > 0 || hi < d.p.size()) {
    d.p = std::vector<double>(d.p.begin() + static_cast<std::ptrdiff_t>(lo),
                              d.p.begin() + static_cast<std::ptrdiff_t>(hi));
    d.offset += static_cast<std::int64_t>(lo);
  }
  d.err += cut + cut_hi;
}

Dist multiply(const Dist& a, const Dist& b, std::int64_t cap) {
  Dist c;
  c.offset = a.offset + b.offset;
  c.p.assign(a.p.size() + b.p.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.p.size(); ++i) {
    const double x = a.p[i];
    if (x == 0.0) continue;
    double* out = c.p.data() + i;
    const double* in = b.p.data();
    const std::size_t len = b.p.size();
    for (std::size_t j = 0; j < len; ++j) out[j] += x * in[j];
  }
  c.err = a.err + b.err;
  trim(c, cap);
  return c;
}

}  // namespace

double Phi::total() const {
  double s = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s += *it;
  return s;
}

Phi phi(const OffspringLaw& law, std::int64_t n, std::int64_t cap,
        double tolerance) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "n must be >= 0");
  Dist base;
  std::int64_t top = law.support_max();
  if (!law.finite_support()) {
    top = 0;
    while (law.tail(top + 1) > kTrim) ++top;
  }
  for (std::int64_t k = 0; k <= top; ++k) base.p.push_back(law.pmf(k));
  base.err = law.finite_support() ? 0.0 : law.tail(top + 1);
  trim(base, cap);

  Dist result;
  result.p = {1.0};
  for (std::int64_t e = n; e > 0; e >>= 1) {
    if (e & 1) result = multiply(result, base, cap);
    if (e > 1) base = multiply(base, base, cap);
  }
  if (result.err > tolerance) {
    throw Error(ErrorKind::kCapTooSmall,
                "convolution truncation bound " + std::to_string(result.err));
  }
  Phi out;
  out.n = n;
  out.offset = result.offset;
  out.p = std::move(result.p);
  out.truncation_bound = result.err;
  return out;
}

}  // namespace looplab
