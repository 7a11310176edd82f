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

#ifndef POMLAB_ERROR_H_
#define POMLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pomlab {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidBlochVector,
  kInvalidDensity,
  kInvalidMeasurement,
  kUnsupportedN,
  kMalformedProtocol,
  kInvalidMask,
  kInvalidEncoding,
  kNotParityOblivious,
  kInvalidDecoder,
  kOracleTooLarge,
  kInvalidModel,
  kInvalidEquivalenceClaim,
  kIncompleteRecord,
  kInsufficientData,
  kParseError,
};

// Stable kebab-case name, e.g. "invalid-bloch-vector".
std::string_view ErrorCodeName(ErrorCode code);

// All library operations report contract violations by throwing Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pomlab

#endif  // POMLAB_ERROR_H_
