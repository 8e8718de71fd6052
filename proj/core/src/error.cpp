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

#include "looplab/error.hpp"

namespace looplab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotAFirstPassagePath: return "NotAFirstPassagePath";
    case ErrorKind::kRootHasNoTrunk: return "RootHasNoTrunk";
    case ErrorKind::kTreeTooLarge: return "TreeTooLarge";
    case ErrorKind::kInfeasibleSize: return "InfeasibleSize";
    case ErrorKind::kBudgetExhausted: return "BudgetExhausted";
    case ErrorKind::kTooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorKind::kTailTableMissing: return "TailTableMissing";
    case ErrorKind::kCapTooSmall: return "CapTooSmall";
    case ErrorKind::kNotCritical: return "NotCritical";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kNoVertexAtHeight: return "NoVertexAtHeight";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

}  // namespace looplab
