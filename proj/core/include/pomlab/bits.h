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

#ifndef POMLAB_BITS_H_
#define POMLAB_BITS_H_

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pomlab {

// Largest supported bit count; every enumeration touches 2^n entries.
inline constexpr int kMaxBits = 16;

// An n-bit string x = (x_1, ..., x_n). Bit x_i lives at position i-1 of
// index(), so iterating index() over [0, 2^n) enumerates {0,1}^n.
class BitString {
 public:
  BitString() = default;
  // Throws invalid-argument unless 1 <= n <= kMaxBits and value < 2^n.
  BitString(int n, std::uint32_t value);

  // Parses the little-endian rendering "x1x2...xn".
  static BitString Parse(std::string_view text);

  int size() const { return n_; }
  std::uint32_t index() const { return value_; }
  // 1-based, matching the x_y convention.
  int bit(int i) const { return static_cast<int>((value_ >> (i - 1)) & 1u); }
  int weight() const { return std::popcount(value_); }

  std::string ToString() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int n_ = 1;
  std::uint32_t value_ = 0;
};

// Number of strings in {0,1}^n.
inline std::uint32_t StringCount(int n) { return std::uint32_t{1} << n; }

// x.s = XOR of x_i s_i over i.
inline int DotParity(std::uint32_t x, std::uint32_t s) {
  return std::popcount(x & s) & 1;
}

// Renders index as "x1x2...xn" without constructing a BitString.
std::string RenderBits(int n, std::uint32_t index);

// A parity selector s with Hamming weight >= 2.
class ParityMask {
 public:
  // Throws invalid-mask when weight(bits) < 2.
  explicit ParityMask(BitString bits);
  ParityMask(int n, std::uint32_t value) : ParityMask(BitString(n, value)) {}

  const BitString& bits() const { return bits_; }
  int size() const { return bits_.size(); }
  std::uint32_t index() const { return bits_.index(); }
  std::string ToString() const { return bits_.ToString(); }

  friend bool operator==(const ParityMask&, const ParityMask&) = default;

 private:
  BitString bits_;
};

// The set Par for n bits, in increasing index order (2^n - n - 1 masks).
std::vector<ParityMask> AllParityMasks(int n);

// Throws invalid-argument unless 1 <= n <= kMaxBits.
void CheckBitCount(int n);

}  // namespace pomlab

#endif  // POMLAB_BITS_H_
