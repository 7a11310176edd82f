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

#include "pomlab/bits.h"

#include "pomlab/error.h"

namespace pomlab {

void CheckBitCount(int n) {
  if (n < 1 || n > kMaxBits) {
    throw Error(ErrorCode::kInvalidArgument,
                "bit count " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxBits) + "]");
  }
}

BitString::BitString(int n, std::uint32_t value) : n_(n), value_(value) {
  CheckBitCount(n);
  if (value >= StringCount(n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "value " + std::to_string(value) + " does not fit in " +
                    std::to_string(n) + " bits");
  }
}

BitString BitString::Parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits)) {
    throw Error(ErrorCode::kParseError,
                "bit string length must be in [1, 16]: '" + std::string(text) + "'");
  }
  std::uint32_t value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      value |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      throw Error(ErrorCode::kParseError,
                  "bit string may contain only 0/1: '" + std::string(text) + "'");
    }
  }
  return BitString(static_cast<int>(text.size()), value);
}

std::string RenderBits(int n, std::uint32_t index) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((index >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string BitString::ToString() const { return RenderBits(n_, value_); }

ParityMask::ParityMask(BitString bits) : bits_(bits) {
  if (bits_.weight() < 2) {
    throw Error(ErrorCode::kInvalidMask,
                "parity mask " + bits_.ToString() + " has weight < 2");
  }
}

std::vector<ParityMask> AllParityMasks(int n) {
  CheckBitCount(n);
  std::vector<ParityMask> masks;
  for (std::uint32_t s = 0; s < StringCount(n); ++s) {
    if (std::popcount(s) >= 2) masks.emplace_back(n, s);
  }
  return masks;
}

}  // namespace pomlab
