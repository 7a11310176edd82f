// Copyright 2026 The pomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pomlab/error.h"

namespace pomlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidBlochVector: return "invalid-bloch-vector";
    case ErrorCode::kInvalidDensity: return "invalid-density";
    case ErrorCode::kInvalidMeasurement: return "invalid-measurement";
    case ErrorCode::kUnsupportedN: return "unsupported-n";
    case ErrorCode::kMalformedProtocol: return "malformed-protocol";
    case ErrorCode::kInvalidMask: return "invalid-mask";
    case ErrorCode::kInvalidEncoding: return "invalid-encoding";
    case ErrorCode::kNotParityOblivious: return "not-parity-oblivious";
    case ErrorCode::kInvalidDecoder: return "invalid-decoder";
    case ErrorCode::kOracleTooLarge: return "oracle-too-large";
    case ErrorCode::kInvalidModel: return "invalid-model";
    case ErrorCode::kInvalidEquivalenceClaim: return "invalid-equivalence-claim";
    case ErrorCode::kIncompleteRecord: return "incomplete-record";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kParseError: return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace pomlab
