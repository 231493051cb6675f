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

#ifndef CYCLES_ERROR_H_
#define CYCLES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycles {

enum class ErrorCode {
  kInvalidGraph,
  kInvalidPosition,
  kIllegalMove,
  kBudgetExceeded,
  kUnknownFamily,
  kOutOfRange,
  kParse,
  kCertificateViolation,
  kCorruptState,
  kDigestMismatch,
};

// Stable lower-case name used in JSON error bodies and CLI diagnostics.
std::string_view ErrorCodeName(ErrorCode code);

// All domain failures are reported through this exception. `reason` is a
// short machine-readable tag (e.g. "disconnected", "death-move"); what()
// carries the human-readable message.
class CyclesError : public std::runtime_error {
 public:
  CyclesError(ErrorCode code, std::string reason, const std::string& message)
      : std::runtime_error(message), code_(code), reason_(std::move(reason)) {}

  ErrorCode code() const { return code_; }
  const std::string& reason() const { return reason_; }

 private:
  ErrorCode code_;
  std::string reason_;
};

}  // namespace cycles

#endif  // CYCLES_ERROR_H_
