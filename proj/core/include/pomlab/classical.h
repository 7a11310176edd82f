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

#ifndef POMLAB_CLASSICAL_H_
#define POMLAB_CLASSICAL_H_

#include <array>
#include <cstdint>
#include <vector>

#include "pomlab/bits.h"

namespace pomlab {

// Tolerance for declaring a Fourier coefficient zero.
inline constexpr double kObliviousTolerance = 1e-9;

// Conditional message distribution p(m | P_x): a 2^n x M row-stochastic
// table.
class ClassicalEncoding {
 public:
  // Throws invalid-encoding on bad shape, entries outside [-1e-12, 1 + 1e-12]
  // or rows that do not sum to 1 within 1e-12.
  ClassicalEncoding(int n, int alphabet, std::vector<double> table);

  // Every string mapped to the same uniform distribution over M messages.
  static ClassicalEncoding Constant(int n, int alphabet);
  // Deterministically sends m = x_i over a binary alphabet.
  static ClassicalEncoding SingleBit(int n, int i);

  int n() const { return n_; }
  int alphabet() const { return alphabet_; }
  std::uint32_t rows() const { return StringCount(n_); }
  double operator()(std::uint32_t x, int m) const {
    return table_[x * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(m)];
  }
  const std::vector<double>& table() const { return table_; }

 private:
  int n_;
  int alphabet_;
  std::vector<double> table_;
};

// p(m | P_x) = sum_r coefficient(m, r) (-1)^{x.r}.
class FourierTable {
 public:
  FourierTable(int n, int alphabet, std::vector<double> coefficients)
      : n_(n), alphabet_(alphabet), coefficients_(std::move(coefficients)) {}

  int n() const { return n_; }
  int alphabet() const { return alphabet_; }
  double coefficient(int m, std::uint32_t r) const {
    return coefficients_[static_cast<std::size_t>(m) * StringCount(n_) + r];
  }

  // Evaluates the series at every x; the inverse of FourierTransform.
  std::vector<double> Reconstruct() const;

 private:
  int n_;
  int alphabet_;
  std::vector<double> coefficients_;  // [m][r]
};

// chi_r(x) = (-1)^{x.r}.
inline int Character(std::uint32_t r, std::uint32_t x) { return DotParity(x, r) ? -1 : 1; }

// coefficient(m, r) = 2^-n sum_x chi_r(x) p(m | P_x), via the fast
// Walsh-Hadamard butterfly.
FourierTable FourierTransform(const ClassicalEncoding& e);

struct ObliviousnessCheck {
  bool oblivious = false;
  // max over m and s in Par of |coefficient(m, s)|.
  double max_violation = 0.0;
};

ObliviousnessCheck IsParityOblivious(const ClassicalEncoding& e,
                                     double tolerance = kObliviousTolerance);

// p(m|P_x) = p(0) p_0(m) + sum_i p(i) [p_{i,0}(m) d(x_i,0) + p_{i,1}(m) d(x_i,1)].
struct CanonicalDecomposition {
  int n = 0;
  int alphabet = 0;
  // weights[i] = p(i) for i in 0..n.
  std::vector<double> weights;
  std::vector<double> p0;
  // pib[i - 1][b] is p_{i,b}; uniform when p(i) vanishes (see `used`).
  std::vector<std::array<std::vector<double>, 2>> pib;
  // used[i] is false when weights[i] == 0 and the distribution is filler.
  std::vector<bool> used;

  // Derivation values.
  std::vector<std::uint32_t> sign_string;             // z(m), as an index
  std::vector<double> a0;                              // a_0(m)
  std::vector<std::array<std::vector<double>, 2>> a;   // a_{i,b}(m)
  double big_a0 = 0.0;                                 // A_0
  std::vector<std::array<double, 2>> big_a;            // A_{i,b}

  // max_i |A_{i,0} - A_{i,1}|.
  double MarginalImbalance() const;
  std::vector<double> Reassemble() const;
};

// Builds the canonical form of a parity-oblivious encoding: signed Fourier
// coefficients to a_{i,b}, the sign string z(m) certifying a_0 >= 0, then
// normalization. Throws not-parity-oblivious when IsParityOblivious fails at
// kObliviousTolerance, invalid-encoding if a_0(m) < -1e-10.
CanonicalDecomposition Decompose(const ClassicalEncoding& e);

// Inverse of Decompose: assembles p(m|P_x) from the canonical ingredients.
// weights over {0..n}, p0 and every pib[i][b] must be distributions.
ClassicalEncoding ComposeCanonical(int n, int alphabet, const std::vector<double>& weights,
                                   const std::vector<double>& p0,
                                   const std::vector<std::array<std::vector<double>, 2>>& pib);

// Bob's deterministic guess b = output(m, y).
class Decoder {
 public:
  Decoder(int n, int alphabet, std::vector<int> bits);
  static Decoder AllZero(int n, int alphabet);

  int n() const { return n_; }
  int alphabet() const { return alphabet_; }
  int operator()(int m, int y) const {
    return bits_[static_cast<std::size_t>(m) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(y - 1)];
  }

 private:
  int n_;
  int alphabet_;
  std::vector<int> bits_;  // [m][y - 1]
};

// (1 / 2^n n) sum_{x,y} sum_m p(m|P_x) [d(m, y) = x_y].
// Throws invalid-decoder on a shape mismatch.
double ClassicalSuccess(const ClassicalEncoding& e, const Decoder& d);

// Maximum-likelihood decoder; ties (within 1e-12) go to b = 0.
Decoder OptimalDecoder(const ClassicalEncoding& e);

struct OracleResult {
  double value = 0.0;
  ClassicalEncoding encoding = ClassicalEncoding::Constant(1, 1);
  Decoder decoder = Decoder::AllZero(1, 1);
  std::size_t decoders_examined = 0;
};

// Independent optimum over all parity-oblivious encodings with M messages:
// for each decoder table, an LP maximizes the success over encodings under
// row normalization, nonnegativity and the parity constraints. When
// M * n <= 12 every one of the 2^(M n) tables is solved; larger instances
// enumerate one table per multiset of decoder columns, which loses nothing
// because relabeling messages maps any encoding/decoder pair onto that set.
// Throws oracle-too-large when n > 3 or M > 8, invalid-argument for n, M < 1.
OracleResult BruteForceOptimum(int n, int alphabet);

}  // namespace pomlab

#endif  // POMLAB_CLASSICAL_H_
