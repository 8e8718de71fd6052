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

// Test-only reference implementations, written independently of the library
// code paths they check.

#ifndef LOOPLAB_TESTS_ORACLES_HPP_
#define LOOPLAB_TESTS_ORACLES_HPP_

#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <vector>

namespace oracle {

struct Node {
  std::vector<std::unique_ptr<Node>> kids;
  int id = 0;  // depth-first index
};

// Recursive parse of a lexicographic degree sequence.
inline std::unique_ptr<Node> parse(const std::vector<int>& seq,
                                   std::size_t& pos) {
  auto node = std::make_unique<Node>();
  node->id = static_cast<int>(pos);
  const int k = seq.at(pos++);
  for (int i = 0; i < k; ++i) node->kids.push_back(parse(seq, pos));
  return node;
}

struct Paths {
  std::vector<int> w, h, c;
};

inline void walk(const Node& n, int depth, Paths& p) {
  p.h.push_back(depth);
  p.w.push_back(p.w.back() + static_cast<int>(n.kids.size()) - 1);
  p.c.push_back(depth);
  for (const auto& k : n.kids) {
    walk(*k, depth + 1, p);
    p.c.push_back(depth);
  }
}

inline Paths paths(const std::vector<int>& seq) {
  std::size_t pos = 0;
  auto root = parse(seq, pos);
  Paths p;
  p.w.push_back(0);
  walk(*root, 0, p);
  return p;
}

// Adjacency of a Loop graph built directly from the cycle definition,
// using an explicit parent list.
inline std::vector<std::vector<int>> loop_adjacency(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<std::vector<int>> kids(n);
  std::vector<int> stack;
  std::vector<int> need(n);
  for (int v = 0; v < n; ++v) {
    if (!stack.empty()) {
      kids[stack.back()].push_back(v);
      if (--need[stack.back()] == 0) stack.pop_back();
    }
    need[v] = seq[v];
    if (seq[v] > 0) stack.push_back(v);
    while (!stack.empty() && need[stack.back()] == 0) stack.pop_back();
  }
  std::vector<std::vector<int>> adj(n);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int u = 0; u < n; ++u) {
    const auto& ks = kids[u];
    if (ks.empty()) continue;
    std::vector<int> cyc{u};
    cyc.insert(cyc.end(), ks.begin(), ks.end());
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      link(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
  }
  return adj;
}

// Plain tree adjacency (parent-child edges) from the degree sequence.
inline std::vector<std::vector<int>> tree_adjacency(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<int> stack, need(n);
  for (int v = 0; v < n; ++v) {
    if (!stack.empty()) {
      adj[stack.back()].push_back(v);
      adj[v].push_back(stack.back());
      if (--need[stack.back()] == 0) stack.pop_back();
    }
    need[v] = seq[v];
    if (seq[v] > 0) stack.push_back(v);
  }
  return adj;
}

inline std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int s) {
  std::vector<int> d(adj.size(), -1);
  std::deque<int> q{s};
  d[s] = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int w : adj[v]) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push_back(w);
      }
    }
  }
  return d;
}

// Exact GH distance by scanning every relation R subset of A x B (tiny
// spaces only).
inline double gh_brute(const std::vector<std::vector<double>>& a,
                       const std::vector<std::vector<double>>& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t cells = na * nb;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<bool> ca(na), cb(nb);
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask >> c & 1) {
        ca[c / nb] = true;
        cb[c % nb] = true;
      }
    }
    bool ok = true;
    for (bool x : ca) ok = ok && x;
    for (bool x : cb) ok = ok && x;
    if (!ok) continue;
    double dis = 0.0;
    for (std::size_t c = 0; c < cells; ++c) {
      if (!(mask >> c & 1)) continue;
      for (std::size_t e = 0; e < cells; ++e) {
        if (!(mask >> e & 1)) continue;
        const double x = a[c / nb][e / nb] - b[c % nb][e % nb];
        dis = std::max(dis, x < 0 ? -x : x);
      }
    }
    best = std::min(best, dis);
  }
  return best / 2.0;
}

// All sequences (k_1..k_n) over `support` with weight prod p(k_i), fed to f.
inline void sequences(const std::vector<double>& p, int n,
                      const std::function<void(const std::vector<int>&, double)>& f) {
  std::vector<int> cur(n, 0);
  std::function<void(int, double)> rec = [&](int i, double w) {
    if (i == n) {
      f(cur, w);
      return;
    }
    for (int k = 0; k < static_cast<int>(p.size()); ++k) {
      if (p[k] == 0.0) continue;
      cur[i] = k;
      rec(i + 1, w * p[k]);
    }
  };
  rec(0, 1.0);
}

}  // namespace oracle

#endif  // LOOPLAB_TESTS_ORACLES_HPP_
