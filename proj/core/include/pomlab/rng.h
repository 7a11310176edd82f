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

#ifndef POMLAB_RNG_H_
#define POMLAB_RNG_H_

#include <array>
#include <cstdint>
#include <limits>

namespace pomlab {

// Philox4x32-10 counter-based generator (Salmon et al., Random123).
// The 64-bit key selects a stream family; the upper two counter words
// select an independent substream, so (seed, a, b) triples never share
// output regardless of how work is scheduled.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint32_t stream_hi = 0, std::uint32_t stream_lo = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform double in [0, 1) with 53 random bits.
  double NextUniform();

  // One application of the 10-round bijection.
  static Counter Block(Counter counter, Key key);

 private:
  Key key_;
  Counter counter_;
  Counter buffer_{};
  int buffered_ = 0;
};

}  // namespace pomlab

#endif  // POMLAB_RNG_H_
