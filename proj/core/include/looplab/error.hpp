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

#ifndef LOOPLAB_ERROR_HPP_
#define LOOPLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace looplab {

enum class ErrorKind {
  kNotAFirstPassagePath,
  kRootHasNoTrunk,
  kTreeTooLarge,
  kInfeasibleSize,
  kBudgetExhausted,
  kTooLargeToEnumerate,
  kTailTableMissing,
  kCapTooSmall,
  kNotCritical,
  kTooLarge,
  kNoVertexAtHeight,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace looplab

#endif  // LOOPLAB_ERROR_HPP_
