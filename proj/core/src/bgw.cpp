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

#include "looplab/bgw.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "looplab/error.hpp"
#include "looplab/walk.hpp"

namespace looplab {

namespace {

std::vector<std::int64_t> positive_atoms(const OffspringLaw& law,
                                         std::int64_t limit) {
  std::vector<std::int64_t> atoms;
  const std::int64_t top = std::min(limit, law.support_max());
  for (std::int64_t k = 0; k <= top; ++k) {
    if (law.pmf(k) > 0.0) atoms.push_back(k);
  }
  return atoms;
}

PlaneTree tree_from_increments(std::span<const std::int64_t> x) {
  const std::size_t n = x.size();
  const std::size_t s = first_passage_rotation(x);
  std::vector<Index> seq(n);
  for (std::size_t i = 0; i < n; ++i) {
    seq[i] = static_cast<Index>(x[(s + i) % n] + 1);
  }
  return PlaneTree::from_degree_sequence(std::move(seq));
}

void check_size(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "size must be >= 1");
  if (n > kMaxVertices) {
    throw Error(ErrorKind::kTreeTooLarge, "size beyond the vertex cap");
  }
}

// Uniform weak composition of s into n parts (stars and bars).
void uniform_composition(std::int64_t s, std::int64_t n, RandomSource& src,
                         std::vector<std::int64_t>& x) {
  x.assign(static_cast<std::size_t>(n), -1);
  std::int64_t stars = s;
  std::int64_t slots = s + n - 1;
  std::size_t part = 0;
  while (slots > 0) {
    if (src.below(static_cast<std::uint64_t>(slots)) <
        static_cast<std::uint64_t>(stars)) {
      ++x[part];
      --stars;
    } else {
      ++part;
    }
    --slots;
  }
}

// Uniform choice of m of the n places for the atom d, others 0.
void uniform_two_point(std::int64_t d, std::int64_t m, std::int64_t n,
                       RandomSource& src, std::vector<std::int64_t>& x) {
  x.assign(static_cast<std::size_t>(n), -1);
  std::int64_t left = m;
  for (std::int64_t i = 0; i < n; ++i) {
    if (src.below(static_cast<std::uint64_t>(n - i)) <
        static_cast<std::uint64_t>(left)) {
      x[i] = d - 1;
      --left;
    }
  }
}

}  // namespace

PlaneTree sample_bgw(const OffspringLaw& law, RandomSource& src,
                     std::int64_t cap) {
  std::vector<Index> seq;
  std::int64_t w = 0;
  while (true) {
    if (static_cast<std::int64_t>(seq.size()) >= cap) {
      throw Error(ErrorKind::kTreeTooLarge,
                  "tree exceeded " + std::to_string(cap) + " vertices");
    }
    const std::int64_t k = law.sample(src);
    if (k > kMaxVertices) {
      throw Error(ErrorKind::kTreeTooLarge, "child count beyond the cap");
    }
    seq.push_back(static_cast<Index>(k));
    w += k - 1;
    if (w < 0) break;
  }
  return PlaneTree::from_degree_sequence(std::move(seq));
}

bool size_feasible(const OffspringLaw& law, std::int64_t n) {
  if (n < 1) return false;
  if (n == 1 || law.pmf(1) > 0.0) return true;
  // n - 1 must be a sum of positive support atoms (at most n of them, which
  // holds automatically once mu(1) = 0).
  const std::int64_t s = n - 1;
  std::vector<std::int64_t> atoms = positive_atoms(law, s);
  atoms.erase(atoms.begin());
  if (atoms.empty()) return false;
  std::int64_t g = 0;
  for (std::int64_t a : atoms) g = std::gcd(g, a);
  if (s % g != 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(s) + 1, 0);
  reach[0] = 1;
  for (std::int64_t v = 1; v <= s; ++v) {
    for (std::int64_t a : atoms) {
      if (a > v) break;
      if (reach[v - a]) {
        reach[v] = 1;
        break;
      }
    }
  }
  return reach[s] != 0;
}

std::int64_t nearest_feasible_size(const OffspringLaw& law, std::int64_t n) {
  for (std::int64_t m = std::max<std::int64_t>(n, 1); m < n + 1000; ++m) {
    if (size_feasible(law, m)) return m;
  }
  throw Error(ErrorKind::kInfeasibleSize,
              "no feasible size near " + std::to_string(n));
}

std::size_t first_passage_rotation(std::span<const std::int64_t> increments) {
  std::int64_t sum = 0;
  std::int64_t best = 0;
  std::size_t arg = 0;
  for (std::size_t j = 0; j < increments.size(); ++j) {
    sum += increments[j];
    if (j == 0 || sum < best) {
      best = sum;
      arg = j + 1;
    }
  }
  if (sum != -1) {
    throw Error(ErrorKind::kInvalidArgument, "increments must sum to -1");
  }
  return arg % increments.size();
}

bool is_first_passage(std::span<const Index> degrees) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    w += degrees[i] - 1;
    if (w < 0) return i + 1 == degrees.size();
  }
  return false;
}

PlaneTree sample_bgw_exact_n(const OffspringLaw& law, std::int64_t n,
                             RandomSource& src, const ExactSizeOptions& opts) {
  check_size(n);
  if (!size_feasible(law, n)) {
    throw Error(ErrorKind::kInfeasibleSize,
                "no tree with " + std::to_string(n) + " vertices");
  }
  if (n == 1) {
    if (opts.attempts != nullptr) *opts.attempts = 1;
    return PlaneTree();
  }
  const std::int64_t s = n - 1;
  std::vector<std::int64_t> x;
  if (law.kind() == LawKind::kGeometric) {
    uniform_composition(s, n, src, x);
    if (opts.attempts != nullptr) *opts.attempts = 1;
    return tree_from_increments(x);
  }
  if (law.finite_support()) {
    const std::vector<std::int64_t> atoms = positive_atoms(law, law.support_max());
    if (atoms.size() == 2) {
      // size_feasible ensured atoms[1] divides n - 1.
      uniform_two_point(atoms[1], s / atoms[1], n, src, x);
      if (opts.attempts != nullptr) *opts.attempts = 1;
      return tree_from_increments(x);
    }
  }
  x.resize(static_cast<std::size_t>(n));
  for (std::int64_t attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    std::int64_t total = 0;
    std::int64_t i = 0;
    for (; i < n; ++i) {
      const std::int64_t k = law.sample(src);
      total += k;
      if (total > s) break;
      x[i] = k - 1;
    }
    if (i == n && total == s) {
      if (opts.attempts != nullptr) *opts.attempts = attempt;
      return tree_from_increments(x);
    }
  }
  throw Error(ErrorKind::kBudgetExhausted,
              "exact-size rejection gave up after " +
                  std::to_string(opts.max_attempts) + " attempts");
}

PlaneTree sample_bgw_at_least_n(const OffspringLaw& law, std::int64_t n,
                                RandomSource& src, const AtLeastOptions& opts) {
  check_size(n);
  if (opts.method == AtLeastMethod::kSurvivalTable) {
    if (opts.table == nullptr) {
      throw Error(ErrorKind::kInvalidArgument, "survival table not supplied");
    }
    WalkPath path;
    path.values.push_back(0);
    opts.table->extend_conditioned(path, n - 1, n - 1, src);
    std::vector<Index> seq;
    seq.reserve(static_cast<std::size_t>(n) * 2);
    for (std::int64_t i = 1; i < n; ++i) {
      seq.push_back(static_cast<Index>(path.increment(i) + 1));
    }
    std::int64_t w = path.values.back();
    while (w >= 0) {
      if (static_cast<std::int64_t>(seq.size()) >= opts.cap) {
        throw Error(ErrorKind::kTreeTooLarge,
                    "tree exceeded " + std::to_string(opts.cap) + " vertices");
      }
      const std::int64_t k = law.sample(src);
      seq.push_back(static_cast<Index>(k));
      w += k - 1;
    }
    if (opts.attempts != nullptr) *opts.attempts = 1;
    return PlaneTree::from_degree_sequence(std::move(seq));
  }
  for (std::int64_t attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    PlaneTree t = sample_bgw(law, src, opts.cap);
    if (t.size() >= n) {
      if (opts.attempts != nullptr) *opts.attempts = attempt;
      return t;
    }
  }
  throw Error(ErrorKind::kBudgetExhausted,
              "no tree of size >= " + std::to_string(n) + " in " +
                  std::to_string(opts.max_attempts) + " attempts");
}

TrunkStarSampler::TrunkStarSampler(const OffspringLaw& law)
    : star_(size_biased(law)) {}

TrunkSkeleton TrunkStarSampler::sample(std::int64_t h, RandomSource& src) const {
  if (h < 1) throw Error(ErrorKind::kInvalidArgument, "trunk height must be >= 1");
  TrunkSkeleton s;
  s.child_counts.resize(static_cast<std::size_t>(h));
  s.spine_pos.resize(static_cast<std::size_t>(h));
  for (std::int64_t i = 0; i < h; ++i) {
    const std::int64_t x = star_.sample(src);
    s.child_counts[i] = static_cast<Index>(x);
    s.spine_pos[i] = static_cast<Index>(1 + src.below(static_cast<std::uint64_t>(x)));
  }
  return s;
}

TrunkSkeleton sample_trunk_star(const OffspringLaw& law, std::int64_t h,
                                RandomSource& src) {
  return TrunkStarSampler(law).sample(h, src);
}

double sample_J(double gamma, double beta, RandomSource& src) {
  if (!(gamma > 0.0) || !(beta > 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "need gamma > 0, beta > 1");
  }
  return gamma * std::pow(src.uniform_pos(), -1.0 / beta);
}

double sample_R(RandomSource& src) { return std::sqrt(-std::log(src.uniform_pos())); }

namespace {

struct Enumerator {
  std::vector<std::int64_t> atoms;
  std::vector<double> mass;
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::vector<Index> seq;
  std::vector<WeightedTree>* out = nullptr;
  ForestWeight total;

  // Prefix seq[0..i) has walk value w (>= 1 - k) and weight `weight`.
  void run(std::int64_t i, std::int64_t w, double weight) {
    if (i == n) {
      if (w != -k) return;
      total.weight += weight;
      ++total.count;
      if (out != nullptr) {
        out->push_back({PlaneTree::from_degree_sequence(seq), weight});
      }
      return;
    }
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const std::int64_t next = w + atoms[a] - 1;
      const std::int64_t left = n - i - 1;
      // Must stay above -k before the end and reach -k in `left` steps.
      if (left > 0 && next < 1 - k) continue;
      if (next - left > -k) break;
      seq[i] = static_cast<Index>(atoms[a]);
      run(i + 1, next, weight * mass[a]);
    }
  }
};

Enumerator make_enumerator(const OffspringLaw& law, std::int64_t k,
                           std::int64_t n) {
  if (n > kMaxEnumerate) {
    throw Error(ErrorKind::kTooLargeToEnumerate,
                "enumeration limited to " + std::to_string(kMaxEnumerate) +
                    " vertices");
  }
  if (!law.finite_support()) {
    throw Error(ErrorKind::kInvalidArgument,
                "enumeration needs a finite-support law");
  }
  if (n < 1 || k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need n, k >= 1");
  }
  Enumerator e;
  e.atoms = positive_atoms(law, n);
  for (std::int64_t a : e.atoms) e.mass.push_back(law.pmf(a));
  e.k = k;
  e.n = n;
  e.seq.assign(static_cast<std::size_t>(n), 0);
  return e;
}

}  // namespace

std::vector<WeightedTree> enumerate_trees(const OffspringLaw& law,
                                          std::int64_t n) {
  Enumerator e = make_enumerator(law, 1, n);
  std::vector<WeightedTree> out;
  e.out = &out;
  e.run(0, 0, 1.0);
  return out;
}

ForestWeight enumerate_forests(const OffspringLaw& law, std::int64_t k,
                               std::int64_t n) {
  Enumerator e = make_enumerator(law, k, n);
  e.run(0, 0, 1.0);
  return e.total;
}

}  // namespace looplab
