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

#include "pomlab/hermitian.h"

#include <algorithm>
#include <cmath>

#include "pomlab/error.h"

namespace pomlab {
namespace {

constexpr double kOffDiagonalTolerance = 1e-14;
constexpr int kMaxSweeps = 100;

double OffDiagonalNorm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

// Classic cyclic Jacobi on a real symmetric n x n matrix, in place.
void CyclicJacobi(std::vector<double>& a, std::size_t n) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  const double threshold = kOffDiagonalTolerance * std::max(scale, 1.0);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (OffDiagonalNorm(a, n) < threshold) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  if (OffDiagonalNorm(a, n) >= threshold) {
    throw Error(ErrorCode::kInvalidArgument, "Jacobi eigensolver did not converge");
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::FromQubit(const ComplexMatrix2& m) {
  ComplexMatrix out(2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = m(r, c);
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double k) {
  for (auto& v : e_) v *= k;
  return *this;
}

double ComplexMatrix::HermiticityDeviation() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

Complex ComplexMatrix::Trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix Kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

std::vector<double> JacobiEigenvalues(const ComplexMatrix& hermitian) {
  const std::size_t n = hermitian.dim();
  const std::size_t m = 2 * n;
  // Symmetrize so tiny anti-Hermitian rounding does not leak into the embedding.
  std::vector<double> a(m * m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex h = 0.5 * (hermitian(r, c) + std::conj(hermitian(c, r)));
      a[r * m + c] = h.real();
      a[(r + n) * m + (c + n)] = h.real();
      a[r * m + (c + n)] = -h.imag();
      a[(r + n) * m + c] = h.imag();
    }
  }
  CyclicJacobi(a, m);
  std::vector<double> doubled(m);
  for (std::size_t i = 0; i < m; ++i) doubled[i] = a[i * m + i];
  std::sort(doubled.begin(), doubled.end());
  // Each eigenvalue of the Hermitian matrix appears twice in the embedding.
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

double TraceNorm(const ComplexMatrix& hermitian) {
  double sum = 0.0;
  for (double v : JacobiEigenvalues(hermitian)) sum += std::abs(v);
  return sum;
}

}  // namespace pomlab
