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

#include <algorithm>
#include <cmath>
#include <string>

#include "pomlab/error.h"
#include "pomlab/parallel.h"
#include "pomlab/simplex.h"

namespace pomlab {
namespace {

constexpr double kEntryTolerance = 1e-12;
constexpr double kCanonicalTolerance = 1e-10;
constexpr double kUnusedWeight = 1e-12;
constexpr int kExhaustiveDecoderBits = 12;
constexpr int kOracleMaxBits = 3;
constexpr int kOracleMaxAlphabet = 8;

// In-place Walsh-Hadamard butterfly over a 2^n vector (unnormalized).
void WalshHadamard(std::vector<double>& f) {
  for (std::size_t len = 1; len < f.size(); len <<= 1) {
    for (std::size_t i = 0; i < f.size(); i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        const double u = f[j];
        const double v = f[j + len];
        f[j] = u + v;
        f[j + len] = u - v;
      }
    }
  }
}

// One LP over encodings for a fixed decoder; returns the optimum value and
// fills `table` with the maximizing encoding when requested.
double SolveForDecoder(int n, int alphabet, const Decoder& d,
                       const std::vector<ParityMask>& masks, std::vector<double>* table) {
  const std::uint32_t rows = StringCount(n);
  const auto m_count = static_cast<std::uint32_t>(alphabet);
  LinearProgram lp;
  lp.num_vars = static_cast<int>(rows * m_count);
  lp.objective.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
  const double prior = 1.0 / (static_cast<double>(rows) * n);
  for (std::uint32_t x = 0; x < rows; ++x) {
    for (std::uint32_t m = 0; m < m_count; ++m) {
      int correct = 0;
      for (int y = 1; y <= n; ++y) {
        if (d(static_cast<int>(m), y) == static_cast<int>((x >> (y - 1)) & 1u)) ++correct;
      }
      lp.objective[x * m_count + m] = prior * correct;
    }
  }
  for (std::uint32_t x = 0; x < rows; ++x) {
    std::vector<double> row(static_cast<std::size_t>(lp.num_vars), 0.0);
    for (std::uint32_t m = 0; m < m_count; ++m) row[x * m_count + m] = 1.0;
    lp.AddEquality(std::move(row), 1.0);
  }
  for (std::uint32_t m = 0; m < m_count; ++m) {
    for (const ParityMask& s : masks) {
      std::vector<double> row(static_cast<std::size_t>(lp.num_vars), 0.0);
      for (std::uint32_t x = 0; x < rows; ++x) row[x * m_count + m] = Character(s.index(), x);
      lp.AddEquality(std::move(row), 0.0);
    }
  }
  const LpSolution sol = SolveLinearProgram(lp);
  if (sol.status != LpStatus::kOptimal) {
    // The constant encoding is always feasible and the objective is bounded.
    throw Error(ErrorCode::kInvalidArgument, "oracle LP did not reach an optimum");
  }
  if (table != nullptr) *table = sol.x;
  return sol.value;
}

Decoder DecoderFromColumns(int n, int alphabet, const std::vector<std::uint32_t>& columns) {
  std::vector<int> bits(static_cast<std::size_t>(alphabet * n));
  for (int m = 0; m < alphabet; ++m) {
    for (int y = 1; y <= n; ++y) {
      bits[static_cast<std::size_t>(m * n + y - 1)] =
          static_cast<int>((columns[static_cast<std::size_t>(m)] >> (y - 1)) & 1u);
    }
  }
  return Decoder(n, alphabet, std::move(bits));
}

// All nondecreasing length-`alphabet` sequences over [0, 2^n).
std::vector<std::vector<std::uint32_t>> ColumnMultisets(int n, int alphabet) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current(static_cast<std::size_t>(alphabet), 0);
  const std::uint32_t limit = StringCount(n);
  for (;;) {
    out.push_back(current);
    int pos = alphabet - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] + 1 == limit) --pos;
    if (pos < 0) break;
    const std::uint32_t next = current[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < alphabet; ++k) current[static_cast<std::size_t>(k)] = next;
  }
  return out;
}

}  // namespace

ClassicalEncoding::ClassicalEncoding(int n, int alphabet, std::vector<double> table)
    : n_(n), alphabet_(alphabet), table_(std::move(table)) {
  if (n < 1 || n > kMaxBits || alphabet < 1) {
    throw Error(ErrorCode::kInvalidEncoding, "need 1 <= n <= 16 and alphabet >= 1");
  }
  const std::size_t m = static_cast<std::size_t>(alphabet);
  if (table_.size() != StringCount(n) * m) {
    throw Error(ErrorCode::kInvalidEncoding,
                "table has " + std::to_string(table_.size()) + " entries, expected " +
                    std::to_string(StringCount(n) * m));
  }
  for (std::uint32_t x = 0; x < StringCount(n); ++x) {
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double v = table_[x * m + k];
      if (!(v >= -kEntryTolerance && v <= 1.0 + kEntryTolerance)) {
        throw Error(ErrorCode::kInvalidEncoding,
                    "entry outside [0, 1] in row " + RenderBits(n, x));
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kEntryTolerance) {
      throw Error(ErrorCode::kInvalidEncoding, "row " + RenderBits(n, x) + " sums to " +
                                                   std::to_string(sum));
    }
  }
}

ClassicalEncoding ClassicalEncoding::Constant(int n, int alphabet) {
  if (alphabet < 1 || n < 1 || n > kMaxBits) {
    throw Error(ErrorCode::kInvalidEncoding, "need 1 <= n <= 16 and alphabet >= 1");
  }
  return ClassicalEncoding(
      n, alphabet,
      std::vector<double>(StringCount(n) * static_cast<std::size_t>(alphabet), 1.0 / alphabet));
}

ClassicalEncoding ClassicalEncoding::SingleBit(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::kInvalidArgument, "bit index out of range");
  CheckBitCount(n);
  std::vector<double> table(2 * StringCount(n), 0.0);
  for (std::uint32_t x = 0; x < StringCount(n); ++x) table[2 * x + ((x >> (i - 1)) & 1u)] = 1.0;
  return ClassicalEncoding(n, 2, std::move(table));
}

std::vector<double> FourierTable::Reconstruct() const {
  const std::uint32_t rows = StringCount(n_);
  const auto m_count = static_cast<std::size_t>(alphabet_);
  std::vector<double> table(rows * m_count);
  std::vector<double> f(rows);
  for (std::size_t m = 0; m < m_count; ++m) {
    std::copy_n(coefficients_.begin() + static_cast<std::ptrdiff_t>(m * rows), rows, f.begin());
    WalshHadamard(f);
    for (std::uint32_t x = 0; x < rows; ++x) table[x * m_count + m] = f[x];
  }
  return table;
}

FourierTable FourierTransform(const ClassicalEncoding& e) {
  const std::uint32_t rows = e.rows();
  const auto m_count = static_cast<std::size_t>(e.alphabet());
  std::vector<double> coefficients(m_count * rows);
  std::vector<double> f(rows);
  const double scale = 1.0 / static_cast<double>(rows);
  for (std::size_t m = 0; m < m_count; ++m) {
    for (std::uint32_t x = 0; x < rows; ++x) f[x] = e(x, static_cast<int>(m));
    WalshHadamard(f);
    for (std::uint32_t r = 0; r < rows; ++r) coefficients[m * rows + r] = f[r] * scale;
  }
  return FourierTable(e.n(), e.alphabet(), std::move(coefficients));
}

ObliviousnessCheck IsParityOblivious(const ClassicalEncoding& e, double tolerance) {
  const FourierTable ft = FourierTransform(e);
  ObliviousnessCheck out;
  for (int m = 0; m < e.alphabet(); ++m) {
    for (std::uint32_t s = 0; s < e.rows(); ++s) {
      if (std::popcount(s) < 2) continue;
      out.max_violation = std::max(out.max_violation, std::abs(ft.coefficient(m, s)));
    }
  }
  out.oblivious = out.max_violation <= tolerance;
  return out;
}

double CanonicalDecomposition::MarginalImbalance() const {
  double worst = 0.0;
  for (const auto& pair : big_a) worst = std::max(worst, std::abs(pair[0] - pair[1]));
  return worst;
}

std::vector<double> CanonicalDecomposition::Reassemble() const {
  const std::uint32_t rows = StringCount(n);
  const auto m_count = static_cast<std::size_t>(alphabet);
  std::vector<double> table(rows * m_count, 0.0);
  for (std::uint32_t x = 0; x < rows; ++x) {
    for (std::size_t m = 0; m < m_count; ++m) {
      double v = weights[0] * p0[m];
      for (int i = 1; i <= n; ++i) {
        const auto b = static_cast<std::size_t>((x >> (i - 1)) & 1u);
        v += weights[static_cast<std::size_t>(i)] * pib[static_cast<std::size_t>(i - 1)][b][m];
      }
      table[x * m_count + m] = v;
    }
  }
  return table;
}

CanonicalDecomposition Decompose(const ClassicalEncoding& e) {
  const ObliviousnessCheck check = IsParityOblivious(e, kObliviousTolerance);
  if (!check.oblivious) {
    throw Error(ErrorCode::kNotParityOblivious,
                "largest parity Fourier coefficient is " + std::to_string(check.max_violation));
  }
  const int n = e.n();
  const auto m_count = static_cast<std::size_t>(e.alphabet());
  const FourierTable ft = FourierTransform(e);

  CanonicalDecomposition d;
  d.n = n;
  d.alphabet = e.alphabet();
  d.sign_string.assign(m_count, 0);
  d.a0.assign(m_count, 0.0);
  d.a.assign(static_cast<std::size_t>(n), {std::vector<double>(m_count, 0.0),
                                           std::vector<double>(m_count, 0.0)});
  d.big_a.assign(static_cast<std::size_t>(n), {0.0, 0.0});

  for (std::size_t m = 0; m < m_count; ++m) {
    std::uint32_t z = 0;
    for (int i = 1; i <= n; ++i) {
      const double c = ft.coefficient(static_cast<int>(m), std::uint32_t{1} << (i - 1));
      auto& ai = d.a[static_cast<std::size_t>(i - 1)];
      if (c >= 0.0) {
        ai[0][m] = 2.0 * c;
        z |= std::uint32_t{1} << (i - 1);
      } else {
        ai[1][m] = -2.0 * c;
      }
    }
    d.sign_string[m] = z;
    // Every a_{i, z_i(m)} vanishes, so the row at z(m) isolates a_0(m).
    const double a0 = e(z, static_cast<int>(m));
    if (a0 < -kCanonicalTolerance) {
      throw Error(ErrorCode::kInvalidEncoding, "negative a_0 for message " + std::to_string(m));
    }
    d.a0[m] = std::max(a0, 0.0);
  }

  for (std::size_t m = 0; m < m_count; ++m) d.big_a0 += d.a0[m];
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < 2; ++b) {
      for (std::size_t m = 0; m < m_count; ++m) {
        d.big_a[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] +=
            d.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)][m];
      }
    }
  }

  d.weights.assign(static_cast<std::size_t>(n) + 1, 0.0);
  d.used.assign(static_cast<std::size_t>(n) + 1, false);
  d.weights[0] = d.big_a0;
  for (int i = 1; i <= n; ++i) {
    const auto& pair = d.big_a[static_cast<std::size_t>(i - 1)];
    d.weights[static_cast<std::size_t>(i)] = 0.5 * (pair[0] + pair[1]);
  }

  const std::vector<double> uniform(m_count, 1.0 / static_cast<double>(m_count));
  auto normalized = [&](const std::vector<double>& v, double w) {
    std::vector<double> out(m_count);
    for (std::size_t m = 0; m < m_count; ++m) out[m] = v[m] / w;
    return out;
  };
  d.used[0] = d.weights[0] > kUnusedWeight;
  d.p0 = d.used[0] ? normalized(d.a0, d.weights[0]) : uniform;
  d.pib.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    d.used[idx] = d.weights[idx] > kUnusedWeight;
    for (std::size_t b = 0; b < 2; ++b) {
      d.pib[idx - 1][b] = d.used[idx] ? normalized(d.a[idx - 1][b], d.weights[idx]) : uniform;
    }
  }
  return d;
}

ClassicalEncoding ComposeCanonical(int n, int alphabet, const std::vector<double>& weights,
                                   const std::vector<double>& p0,
                                   const std::vector<std::array<std::vector<double>, 2>>& pib) {
  CheckBitCount(n);
  const auto m_count = static_cast<std::size_t>(alphabet);
  if (weights.size() != static_cast<std::size_t>(n) + 1 || p0.size() != m_count ||
      pib.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kInvalidEncoding, "canonical ingredients have the wrong shape");
  }
  CanonicalDecomposition d;
  d.n = n;
  d.alphabet = alphabet;
  d.weights = weights;
  d.p0 = p0;
  d.pib = pib;
  for (const auto& pair : pib) {
    if (pair[0].size() != m_count || pair[1].size() != m_count) {
      throw Error(ErrorCode::kInvalidEncoding, "p_{i,b} has the wrong length");
    }
  }
  return ClassicalEncoding(n, alphabet, d.Reassemble());
}

Decoder::Decoder(int n, int alphabet, std::vector<int> bits)
    : n_(n), alphabet_(alphabet), bits_(std::move(bits)) {
  if (n < 1 || alphabet < 1 ||
      bits_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(alphabet)) {
    throw Error(ErrorCode::kInvalidDecoder, "decoder table has the wrong shape");
  }
  for (int b : bits_) {
    if (b != 0 && b != 1) throw Error(ErrorCode::kInvalidDecoder, "decoder outputs must be bits");
  }
}

Decoder Decoder::AllZero(int n, int alphabet) {
  return Decoder(n, alphabet,
                 std::vector<int>(static_cast<std::size_t>(n) * static_cast<std::size_t>(alphabet), 0));
}

double ClassicalSuccess(const ClassicalEncoding& e, const Decoder& d) {
  if (d.n() != e.n() || d.alphabet() != e.alphabet()) {
    throw Error(ErrorCode::kInvalidDecoder, "decoder shape does not match the encoding");
  }
  double sum = 0.0;
  for (std::uint32_t x = 0; x < e.rows(); ++x) {
    for (int y = 1; y <= e.n(); ++y) {
      const int bit = static_cast<int>((x >> (y - 1)) & 1u);
      for (int m = 0; m < e.alphabet(); ++m) {
        if (d(m, y) == bit) sum += e(x, m);
      }
    }
  }
  return sum / (static_cast<double>(e.rows()) * e.n());
}

Decoder OptimalDecoder(const ClassicalEncoding& e) {
  std::vector<int> bits(static_cast<std::size_t>(e.alphabet()) * static_cast<std::size_t>(e.n()));
  for (int m = 0; m < e.alphabet(); ++m) {
    for (int y = 1; y <= e.n(); ++y) {
      double score[2] = {0.0, 0.0};
      for (std::uint32_t x = 0; x < e.rows(); ++x) score[(x >> (y - 1)) & 1u] += e(x, m);
      bits[static_cast<std::size_t>(m * e.n() + y - 1)] = score[1] > score[0] + 1e-12 ? 1 : 0;
    }
  }
  return Decoder(e.n(), e.alphabet(), std::move(bits));
}

OracleResult BruteForceOptimum(int n, int alphabet) {
  if (n < 1 || alphabet < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n and alphabet must be positive");
  }
  if (n > kOracleMaxBits || alphabet > kOracleMaxAlphabet) {
    throw Error(ErrorCode::kOracleTooLarge,
                "oracle supports n <= 3 and alphabet <= 8, got n = " + std::to_string(n) +
                    ", alphabet = " + std::to_string(alphabet));
  }
  const std::vector<ParityMask> masks = n >= 2 ? AllParityMasks(n) : std::vector<ParityMask>{};
  std::vector<std::vector<std::uint32_t>> candidates;
  if (alphabet * n <= kExhaustiveDecoderBits) {
    const std::uint32_t tables = std::uint32_t{1} << (alphabet * n);
    const std::uint32_t column_mask = StringCount(n) - 1;
    candidates.reserve(tables);
    for (std::uint32_t t = 0; t < tables; ++t) {
      std::vector<std::uint32_t> columns(static_cast<std::size_t>(alphabet));
      for (int m = 0; m < alphabet; ++m) columns[static_cast<std::size_t>(m)] = (t >> (m * n)) & column_mask;
      candidates.push_back(std::move(columns));
    }
  } else {
    candidates = ColumnMultisets(n, alphabet);
  }

  std::vector<double> values(candidates.size());
  ParallelFor(candidates.size(), [&](std::size_t k) {
    values[k] = SolveForDecoder(n, alphabet, DecoderFromColumns(n, alphabet, candidates[k]), masks,
                                nullptr);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[best] + 1e-12) best = k;
  }

  OracleResult out;
  out.decoder = DecoderFromColumns(n, alphabet, candidates[best]);
  std::vector<double> table;
  out.value = SolveForDecoder(n, alphabet, out.decoder, masks, &table);
  // Strip LP rounding before validating as an encoding.
  const auto m_count = static_cast<std::size_t>(alphabet);
  for (std::uint32_t x = 0; x < StringCount(n); ++x) {
    double sum = 0.0;
    for (std::size_t m = 0; m < m_count; ++m) {
      table[x * m_count + m] = std::max(table[x * m_count + m], 0.0);
      sum += table[x * m_count + m];
    }
    for (std::size_t m = 0; m < m_count; ++m) table[x * m_count + m] /= sum;
  }
  out.encoding = ClassicalEncoding(n, alphabet, std::move(table));
  out.decoders_examined = candidates.size();
  return out;
}

}  // namespace pomlab
