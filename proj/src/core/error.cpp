// Copyright 2026 The sanet Authors.
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

#include "sanet/util/error.hpp"

namespace sanet {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNodeNotFound: return "NodeNotFound";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidLink: return "InvalidLink";
    case ErrorCode::kNonMonotoneSnapshots: return "NonMonotoneSnapshots";
    case ErrorCode::kReplay: return "ReplayError";
    case ErrorCode::kNoCandidate: return "NoCandidate";
    case ErrorCode::kInvalidDegree: return "InvalidDegree";
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kUndefined: return "Undefined";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kDegenerateSample: return "DegenerateSample";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sanet
