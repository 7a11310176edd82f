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


#include "pomlab/classical.h"

#include <gtest/gtest.h>

#include <random>

#include "pomlab/error.h"
#include "pomlab/protocol.h"
#include "test_support.h"

namespace pomlab {
namespace {

using testing::NaiveFourier;
using testing::RandomSimplex;

ClassicalEncoding RawEncoding(std::mt19937_64& rng, int n, int m) {
  std::vector<double> table;
  for (std::uint32_t x = 0; x < StringCount(n); ++x) {
    const auto row = RandomSimplex(rng, m);
    table.insert(table.end(), row.begin(), row.end());
  }
  return ClassicalEncoding(n, m, std::move(table));
}

struct CanonicalSample {
  std::vector<double> weights;
  std::vector<double> p0;
  std::vector<std::array<std::vector<double>, 2>> pib;
};

CanonicalSample RandomCanonical(std::mt19937_64& rng, int n, int m) {
  CanonicalSample c;
  c.weights = RandomSimplex(rng, n + 1);
  c.p0 = RandomSimplex(rng, m);
  for (int i = 0; i < n; ++i) c.pib.push_back({RandomSimplex(rng, m), RandomSimplex(rng, m)});
  return c;
}

ClassicalEncoding ObliviousEncoding(std::mt19937_64& rng, int n, int m) {
  const CanonicalSample c = RandomCanonical(rng, n, m);
  return ComposeCanonical(n, m, c.weights, c.p0, c.pib);
}

TEST(Encoding, Validation) {
  EXPECT_THROW(ClassicalEncoding(2, 2, {1, 0, 1, 0}), Error);         // shape
  EXPECT_THROW(ClassicalEncoding(1, 2, {0.5, 0.6, 1, 0}), Error);     // row sum
  EXPECT_THROW(ClassicalEncoding(1, 2, {1.5, -0.5, 1, 0}), Error);    // range
  try {
    ClassicalEncoding(1, 2, {0.5, 0.6, 1, 0});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidEncoding);
  }
}

TEST(Fourier, ConstantEncoding) {
  const FourierTable f = FourierTransform(ClassicalEncoding::Constant(3, 4));
  for (int m = 0; m < 4; ++m) {
    EXPECT_NEAR(f.coefficient(m, 0), 0.25, 1e-15);
    for (std::uint32_t r = 1; r < 8; ++r) EXPECT_NEAR(f.coefficient(m, r), 0.0, 1e-15);
  }
}

TEST(Fourier, SingleBitByHand) {
  // m = x1 at n = 2: p(0|x) = [x1 = 0], four-term sums give +-1/2 on r = "10".
  const FourierTable f = FourierTransform(ClassicalEncoding::SingleBit(2, 1));
  const std::uint32_t r10 = BitString::Parse("10").index();
  EXPECT_NEAR(f.coefficient(0, r10), 0.5, 1e-15);
  EXPECT_NEAR(f.coefficient(1, r10), -0.5, 1e-15);
  EXPECT_NEAR(f.coefficient(0, 3), 0.0, 1e-15);
  EXPECT_NEAR(f.coefficient(1, 3), 0.0, 1e-15);
}

TEST(Fourier, CharactersAreOrthogonal) {
  for (std::uint32_t r = 0; r < 8; ++r) {
    for (std::uint32_t q = 0; q < 8; ++q) {
      int sum = 0;
      for (std::uint32_t x = 0; x < 8; ++x) sum += Character(r, x) * Character(q, x);
      EXPECT_EQ(sum, r == q ? 8 : 0);
    }
  }
}

TEST(Fourier, MatchesNaiveSumAndRoundTrips) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 4;
    const int m = 1 + (t / 4) % 8;
    const ClassicalEncoding e = RawEncoding(rng, n, m);
    const FourierTable f = FourierTransform(e);
    for (int k = 0; k < m; ++k) {
      for (std::uint32_t r = 0; r < e.rows(); ++r) {
        ASSERT_NEAR(f.coefficient(k, r), NaiveFourier(e, k, r), 1e-12);
        double diff = 0.0;
        for (std::uint32_t x = 0; x < e.rows(); ++x) diff += (DotParity(x, r) ? -1 : 1) * e(x, k);
        ASSERT_NEAR(e.rows() * f.coefficient(k, r), diff, 1e-10);
      }
    }
    const auto back = f.Reconstruct();
    for (std::size_t i = 0; i < back.size(); ++i) ASSERT_NEAR(back[i], e.table()[i], 1e-10);
  }
}

TEST(Oblivious, Examples) {
  const ObliviousnessCheck single = IsParityOblivious(ClassicalEncoding::SingleBit(2, 1));
  EXPECT_TRUE(single.oblivious);
  EXPECT_EQ(single.max_violation, 0.0);
  EXPECT_TRUE(IsParityOblivious(ClassicalEncoding::Constant(3, 3)).oblivious);
  // m = x1 xor x2.
  const ClassicalEncoding xor_enc(2, 2, {1, 0, 0, 1, 0, 1, 1, 0});
  const ObliviousnessCheck c = IsParityOblivious(xor_enc);
  EXPECT_FALSE(c.oblivious);
  EXPECT_NEAR(c.max_violation, 0.5, 1e-15);
}

TEST(Oblivious, RawEncodingsRejected) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const ClassicalEncoding e = RawEncoding(rng, 2 + t % 2, 2 + t % 5);
    const ObliviousnessCheck c = IsParityOblivious(e);
    double naive = 0.0;
    for (const ParityMask& s : AllParityMasks(e.n()))
      for (int m = 0; m < e.alphabet(); ++m) naive = std::max(naive, std::abs(NaiveFourier(e, m, s.index())));
    EXPECT_NEAR(c.max_violation, naive, 1e-12);
    EXPECT_FALSE(c.oblivious);
    EXPECT_GT(c.max_violation, 0.0);
    try {
      Decompose(e);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::kNotParityOblivious);
    }
  }
}

TEST(Decompose, SingleBit) {
  const CanonicalDecomposition d = Decompose(ClassicalEncoding::SingleBit(2, 1));
  EXPECT_NEAR(d.weights[0], 0.0, 1e-15);
  EXPECT_NEAR(d.weights[1], 1.0, 1e-15);
  EXPECT_NEAR(d.weights[2], 0.0, 1e-15);
  EXPECT_NEAR(d.pib[0][0][0], 1.0, 1e-15);
  EXPECT_NEAR(d.pib[0][1][1], 1.0, 1e-15);
  EXPECT_FALSE(d.used[0]);
  EXPECT_FALSE(d.used[2]);
  EXPECT_NEAR(d.pib[1][0][0], 0.5, 1e-15);  // uniform filler
}

TEST(Decompose, Constant) {
  const CanonicalDecomposition d = Decompose(ClassicalEncoding::Constant(3, 4));
  EXPECT_NEAR(d.weights[0], 1.0, 1e-15);
  for (double v : d.p0) EXPECT_NEAR(v, 0.25, 1e-15);
}

TEST(Decompose, MixtureSendingIndexAndBit) {
  // m = 2(i - 1) + x_i with i uniform over {1, 2}.
  std::vector<double> table;
  for (std::uint32_t x = 0; x < 4; ++x) {
    std::vector<double> row(4, 0.0);
    row[BitString(2, x).bit(1)] += 0.5;
    row[2 + BitString(2, x).bit(2)] += 0.5;
    table.insert(table.end(), row.begin(), row.end());
  }
  const ClassicalEncoding e(2, 4, table);
  const CanonicalDecomposition d = Decompose(e);
  EXPECT_NEAR(d.weights[1], 0.5, 1e-12);
  EXPECT_NEAR(d.weights[2], 0.5, 1e-12);
  EXPECT_NEAR(d.weights[0], 0.0, 1e-12);
  for (int i = 0; i < 2; ++i)
    for (int b = 0; b < 2; ++b)
      for (int j = 0; j < 2; ++j)
        for (int c = 0; c < 2; ++c) {
          if (i == j && b == c) continue;
          double overlap = 0.0;
          for (int m = 0; m < 4; ++m) overlap += d.pib[i][b][m] * d.pib[j][c][m];
          EXPECT_NEAR(overlap, 0.0, 1e-12);
        }
  const auto back = d.Reassemble();
  for (std::size_t k = 0; k < back.size(); ++k) EXPECT_NEAR(back[k], table[k], 1e-12);
}

TEST(Decompose, RandomObliviousEncodings) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 3;
    const int m = 2 + (t / 3) % 6;
    const ClassicalEncoding e = ObliviousEncoding(rng, n, m);
    ASSERT_TRUE(IsParityOblivious(e).oblivious);
    const CanonicalDecomposition d = Decompose(e);
    double wsum = 0.0;
    for (double w : d.weights) {
      EXPECT_GE(w, -1e-12);
      wsum += w;
    }
    EXPECT_NEAR(wsum, 1.0, 1e-10);
    EXPECT_LE(d.MarginalImbalance(), 1e-10);
    for (std::size_t k = 0; k < d.a0.size(); ++k) {
      const std::uint32_t z = d.sign_string[k];
      EXPECT_NEAR(d.a0[k], e(z, static_cast<int>(k)), 1e-10);
      EXPECT_GE(d.a0[k], -1e-10);
    }
    const auto back = d.Reassemble();
    for (std::size_t k = 0; k < back.size(); ++k) ASSERT_NEAR(back[k], e.table()[k], 1e-10);
  }
}

TEST(ClassicalSuccess, Examples) {
  const ClassicalEncoding e2 = ClassicalEncoding::SingleBit(2, 1);
  EXPECT_NEAR(ClassicalSuccess(e2, OptimalDecoder(e2)), 0.75, 1e-15);
  const ClassicalEncoding e3 = ClassicalEncoding::SingleBit(3, 2);
  EXPECT_NEAR(ClassicalSuccess(e3, OptimalDecoder(e3)), 2.0 / 3.0, 1e-15);
  const ClassicalEncoding c = ClassicalEncoding::Constant(2, 3);
  EXPECT_NEAR(ClassicalSuccess(c, Decoder(2, 3, {1, 0, 0, 1, 1, 1})), 0.5, 1e-15);
  EXPECT_THROW(ClassicalSuccess(c, Decoder::AllZero(2, 2)), Error);
  try {
    ClassicalSuccess(c, Decoder::AllZero(3, 3));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDecoder);
  }
}

TEST(OptimalDecoder, Examples) {
  const Decoder d = OptimalDecoder(ClassicalEncoding::SingleBit(3, 1));
  for (int m = 0; m < 2; ++m) {
    EXPECT_EQ(d(m, 1), m);
    EXPECT_EQ(d(m, 2), 0);
    EXPECT_EQ(d(m, 3), 0);
  }
  const Decoder z = OptimalDecoder(ClassicalEncoding::Constant(2, 4));
  for (int m = 0; m < 4; ++m)
    for (int y = 1; y <= 2; ++y) EXPECT_EQ(z(m, y), 0);
}

TEST(OptimalDecoder, BeatsRandomDecoders) {
  std::mt19937_64 rng(44);
  std::bernoulli_distribution coin;
  for (int t = 0; t < 20; ++t) {
    const ClassicalEncoding e = RawEncoding(rng, 2, 4);
    const double best = ClassicalSuccess(e, OptimalDecoder(e));
    for (int k = 0; k < 100; ++k) {
      std::vector<int> bits(8);
      for (int& b : bits) b = coin(rng);
      EXPECT_GE(best + 1e-15, ClassicalSuccess(e, Decoder(2, 4, bits)));
    }
    // Exhaustive: all 256 decoders.
    double exhaustive = 0.0;
    for (int mask = 0; mask < 256; ++mask) {
      std::vector<int> bits(8);
      for (int j = 0; j < 8; ++j) bits[j] = (mask >> j) & 1;
      exhaustive = std::max(exhaustive, ClassicalSuccess(e, Decoder(2, 4, bits)));
    }
    EXPECT_NEAR(best, exhaustive, 1e-15);
  }
}

TEST(ClassicalBound, ObliviousEncodingsRespectBound) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 3;
    const ClassicalEncoding e = ObliviousEncoding(rng, n, 2 + t % 5);
    EXPECT_LE(ClassicalSuccess(e, OptimalDecoder(e)), NcBound(n) + 1e-9);
  }
}

TEST(Oracle, SmallCases) {
  EXPECT_NEAR(BruteForceOptimum(2, 1).value, 0.5, 1e-12);
  const OracleResult r = BruteForceOptimum(2, 4);
  EXPECT_NEAR(r.value, 0.75, 1e-9);
  EXPECT_EQ(r.decoders_examined, 256u);
  EXPECT_TRUE(IsParityOblivious(r.encoding).oblivious);
  EXPECT_NEAR(ClassicalSuccess(r.encoding, r.decoder), r.value, 1e-9);
  EXPECT_NEAR(BruteForceOptimum(1, 2).value, 1.0, 1e-12);
}

TEST(Oracle, NondecreasingInAlphabet) {
  for (int n : {2, 3}) {
    double prev = 0.0;
    for (int m = 1; m <= (n == 2 ? 5 : 4); ++m) {
      const double v = BruteForceOptimum(n, m).value;
      EXPECT_GE(v, prev - 1e-12);
      if (m >= 2) EXPECT_NEAR(v, NcBound(n), 1e-9);
      prev = v;
    }
  }
}

TEST(Oracle, LargeAlphabetUsesColumnMultisets) {
  const OracleResult r = BruteForceOptimum(3, 6);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-9);
  EXPECT_EQ(r.decoders_examined, 1716u);
}

TEST(Oracle, ScaleLimits) {
  try {
    BruteForceOptimum(4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleTooLarge);
  }
  EXPECT_THROW(BruteForceOptimum(2, 9), Error);
  EXPECT_THROW(BruteForceOptimum(2, 0), Error);
}

}  // namespace
}  // namespace pomlab
