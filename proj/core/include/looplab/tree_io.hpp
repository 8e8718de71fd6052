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

#ifndef LOOPLAB_TREE_IO_HPP_
#define LOOPLAB_TREE_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "looplab/plane_tree.hpp"

namespace looplab {

// DSV1: line 1 is n, line 2 holds the n child counts in lexicographic order.
void write_dsv1(std::ostream& os, const PlaneTree& t);
PlaneTree read_dsv1(std::istream& is);

void save_dsv1(const std::filesystem::path& path, const PlaneTree& t);
PlaneTree load_dsv1(const std::filesystem::path& path);

}  // namespace looplab

#endif  // LOOPLAB_TREE_IO_HPP_
