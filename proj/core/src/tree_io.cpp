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

#include "looplab/tree_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "looplab/error.hpp"

namespace looplab {

void write_dsv1(std::ostream& os, const PlaneTree& t) {
  os << t.size() << '\n';
  for (Index v = 0; v < t.size(); ++v) {
    if (v > 0) os << ' ';
    os << t.degree(v);
  }
  os << '\n';
}

PlaneTree read_dsv1(std::istream& is) {
  long long n = 0;
  if (!(is >> n) || n <= 0 || n > kMaxVertices) {
    throw Error(ErrorKind::kParse, "DSV1: bad vertex count");
  }
  std::vector<Index> seq(static_cast<std::size_t>(n));
  for (auto& k : seq) {
    long long v = 0;
    if (!(is >> v) || v < 0 || v >= n) {
      throw Error(ErrorKind::kParse, "DSV1: bad child count");
    }
    k = static_cast<Index>(v);
  }
  return PlaneTree::from_degree_sequence(std::move(seq));
}

void save_dsv1(const std::filesystem::path& path, const PlaneTree& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::kParse, "cannot open " + path.string());
  write_dsv1(os, t);
}

PlaneTree load_dsv1(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::kParse, "cannot open " + path.string());
  return read_dsv1(is);
}

}  // namespace looplab
