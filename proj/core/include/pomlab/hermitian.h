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

#ifndef POMLAB_HERMITIAN_H_
#define POMLAB_HERMITIAN_H_

#include <cstddef>
#include <vector>

#include "pomlab/qubit.h"

namespace pomlab {

// Small dense square complex matrix, row-major. Used for the two-copy
// (4x4) states; the 2x2 paths go through ComplexMatrix2.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  static ComplexMatrix FromQubit(const ComplexMatrix2& m);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(double k);

  double HermiticityDeviation() const;
  Complex Trace() const;

 private:
  std::size_t dim_;
  std::vector<Complex> e_;
};

// a (x) b.
ComplexMatrix Kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues (ascending) of a Hermitian matrix by cyclic Jacobi sweeps on
// its real symmetric embedding [[Re, -Im], [Im, Re]]; iterates until the
// off-diagonal Frobenius norm drops below 1e-14 (relative to the matrix
// scale, floored at 1).
std::vector<double> JacobiEigenvalues(const ComplexMatrix& hermitian);

// Sum of absolute eigenvalues.
double TraceNorm(const ComplexMatrix& hermitian);

}  // namespace pomlab

#endif  // POMLAB_HERMITIAN_H_
