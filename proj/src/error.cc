// Copyright 2026 The Cycles Authors
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

#include "cycles/error.h"

namespace cycles {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph:
      return "invalid-graph";
    case ErrorCode::kInvalidPosition:
      return "invalid-position";
    case ErrorCode::kIllegalMove:
      return "illegal-move";
    case ErrorCode::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorCode::kUnknownFamily:
      return "unknown-family";
    case ErrorCode::kOutOfRange:
      return "out-of-range";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kCertificateViolation:
      return "certificate-violation";
    case ErrorCode::kCorruptState:
      return "corrupt-state";
    case ErrorCode::kDigestMismatch:
      return "digest-mismatch";
  }
  return "unknown";
}

}  // namespace cycles
