// Copyright 2026 The dlite Authors
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

#include "dlite/error.hpp"

namespace dlite {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kAllZero: return "AllZero";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonFiniteInput: return "NonFiniteInput";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kNonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kKlUndefined: return "KlUndefined";
    case ErrorCode::kQuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kInternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace dlite
