// Copyright 2026 The coordplan Authors
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

#ifndef COORDPLAN_ERROR_H_
#define COORDPLAN_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coordplan {

enum class ErrorCode {
  kInvalidArgument,
  kDegeneratePath,
  kSelfIntersecting,
  kOutOfRange,
  kSharedGeometryUnconfigured,
  kMultipleCrossings,
  kStartInConflict,
  kGoalInConflict,
  kStartInObstacle,
  kGoalInObstacle,
  kNoPath,
  kSpanMismatch,
  kNoFeasibleOrder,
  kZeroSegment,
  kTooLarge,
  kParseError,
  kSchemaError,
  kValidationError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; the code
// identifies the failure class so callers (the CLI in particular) can map it
// onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegeneratePath: return "DegeneratePath";
    case ErrorCode::kSelfIntersecting: return "SelfIntersecting";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSharedGeometryUnconfigured:
      return "SharedGeometryUnconfigured";
    case ErrorCode::kMultipleCrossings: return "MultipleCrossings";
    case ErrorCode::kStartInConflict: return "StartInConflict";
    case ErrorCode::kGoalInConflict: return "GoalInConflict";
    case ErrorCode::kStartInObstacle: return "StartInObstacle";
    case ErrorCode::kGoalInObstacle: return "GoalInObstacle";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kSpanMismatch: return "SpanMismatch";
    case ErrorCode::kNoFeasibleOrder: return "NoFeasibleOrder";
    case ErrorCode::kZeroSegment: return "ZeroSegment";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace coordplan

#endif  // COORDPLAN_ERROR_H_
