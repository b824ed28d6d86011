// Copyright 2026 The Persuasion Authors. All rights reserved.
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

#ifndef PERSUASION_ERRORS_H_
#define PERSUASION_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace persuasion {

enum class ErrorCode {
  kMalformedInput,
  kInvariantViolation,
  kPriorMismatch,
  kUndefinedPosterior,
  kNotOnSubsimplex,
  kNoPieceMatches,
  kNotNormalized,
  kNotPoolable,
  kPreconditionFailed,
  kZeroProbabilityEvent,
  kSearchBudgetExceeded,
  kEnumerationTooLarge,
  kProductTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// Process exit status used by the command line tool:
// 1 for malformed input, 2 for failed preconditions, 3 for exhausted budgets.
int ExitStatusFor(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace persuasion

#endif  // PERSUASION_ERRORS_H_
