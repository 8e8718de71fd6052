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

#ifndef LOOPLAB_IDENTITIES_HPP_
#define LOOPLAB_IDENTITIES_HPP_

#include <cstdint>

#include "looplab/offspring_law.hpp"

namespace looplab {

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double discrepancy() const { return lhs > rhs ? lhs - rhs : rhs - lhs; }
};

// P(|T| = n) by enumeration against (1/n) P(W_n = -1) by convolution.
IdentityCheck kemperman_check(const OffspringLaw& law, std::int64_t n);
// Forest of k trees: enumeration against (k/n) P(W_n = -k).
IdentityCheck forest_kemperman_check(const OffspringLaw& law, std::int64_t k,
                                     std::int64_t n);

struct BiasCheck {
  double max_discrepancy = 0.0;
  std::int64_t skeletons = 0;  // distinct skeletons compared
  double root_mass = 0.0;      // P(V_n = root) from the tree side
};

// Both sides of the size-biased trunk identity for trees of size n, over
// every height h and every skeleton indicator. Tree side: enumeration of
// (tree, vertex) pairs. Skeleton side: sum over skeletons of
// prod mu(x_i) * L * phi_{n-h}(L) / ((n - h) phi_n(1)), L the leaf count.
BiasCheck bias_identity_check(const OffspringLaw& law, std::int64_t n);

// sup_k |B_n phi_n(k) - exp(-k^2 / (4 B_n^2)) / sqrt(4 pi)|.
double llt_check(const OffspringLaw& law, std::int64_t n);

}  // namespace looplab

#endif  // LOOPLAB_IDENTITIES_HPP_
