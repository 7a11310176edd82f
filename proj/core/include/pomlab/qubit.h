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

#ifndef POMLAB_QUBIT_H_
#define POMLAB_QUBIT_H_

#include <array>
#include <complex>

namespace pomlab {

using Complex = std::complex<double>;

// Absolute tolerance for every validity check on qubit objects.
inline constexpr double kQubitTolerance = 1e-12;

// Dense 2x2 complex matrix, row-major.
class ComplexMatrix2 {
 public:
  constexpr ComplexMatrix2() = default;
  constexpr ComplexMatrix2(Complex a, Complex b, Complex c, Complex d)
      : e_{a, b, c, d} {}

  static ComplexMatrix2 Identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static ComplexMatrix2 PauliX() { return {0.0, 1.0, 1.0, 0.0}; }
  static ComplexMatrix2 PauliY() { return {0.0, Complex(0, -1), Complex(0, 1), 0.0}; }
  static ComplexMatrix2 PauliZ() { return {1.0, 0.0, 0.0, -1.0}; }

  Complex operator()(int row, int col) const { return e_[2 * row + col]; }
  Complex& operator()(int row, int col) { return e_[2 * row + col]; }

  Complex Trace() const { return e_[0] + e_[3]; }
  ComplexMatrix2 Adjoint() const;
  bool IsFinite() const;
  // Largest |A - A^dagger| entry.
  double HermiticityDeviation() const;

  ComplexMatrix2& operator+=(const ComplexMatrix2& o);
  ComplexMatrix2& operator-=(const ComplexMatrix2& o);
  ComplexMatrix2& operator*=(Complex k);

  friend ComplexMatrix2 operator+(ComplexMatrix2 a, const ComplexMatrix2& b) { return a += b; }
  friend ComplexMatrix2 operator-(ComplexMatrix2 a, const ComplexMatrix2& b) { return a -= b; }
  friend ComplexMatrix2 operator*(ComplexMatrix2 a, Complex k) { return a *= k; }
  friend ComplexMatrix2 operator*(Complex k, ComplexMatrix2 a) { return a *= k; }
  friend ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);

  // Largest entrywise |a - b|.
  friend double MaxAbsDifference(const ComplexMatrix2& a, const ComplexMatrix2& b);

 private:
  std::array<Complex, 4> e_{};
};

// Eigenvalues (ascending) of the Hermitian part of m, by the closed-form
// trace/determinant quadratic.
std::array<double, 2> HermitianEigenvalues(const ComplexMatrix2& m);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double Norm() const;
  double Dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector operator*(double k) const { return {x * k, y * k, z * k}; }
  BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

// A validated qubit state: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
 public:
  // Maximally mixed state I/2.
  DensityOperator();

  // Throws invalid-density if m violates any invariant.
  static DensityOperator FromMatrix(const ComplexMatrix2& m);

  const ComplexMatrix2& matrix() const { return matrix_; }
  double Purity() const;

 private:
  explicit DensityOperator(const ComplexMatrix2& m) : matrix_(m) {}
  ComplexMatrix2 matrix_;
};

// Two-outcome POVM {E0, I - E0}.
class BinaryMeasurement {
 public:
  // Projective measurement along +z (outcome 0 on |0>).
  BinaryMeasurement();

  // Throws invalid-measurement unless effect0 is Hermitian with spectrum
  // in [0, 1] (within tolerance).
  static BinaryMeasurement FromEffect(const ComplexMatrix2& effect0);
  // E0 = (I + a.sigma)/2; |a| = 1 is projective along a, |a| < 1 unsharp.
  // Throws invalid-measurement when |a| > 1.
  static BinaryMeasurement AlongAxis(const BlochVector& axis);

  const ComplexMatrix2& effect0() const { return effect0_; }
  ComplexMatrix2 effect1() const { return ComplexMatrix2::Identity() - effect0_; }
  ComplexMatrix2 effect(int k) const { return k == 0 ? effect0_ : effect1(); }

  // Tr(E0 sigma) for each Pauli; equals the axis for AlongAxis measurements.
  BlochVector Axis() const;

 private:
  explicit BinaryMeasurement(const ComplexMatrix2& e) : effect0_(e) {}
  ComplexMatrix2 effect0_;
};

// rho = (I + r.sigma)/2. Throws invalid-bloch-vector when |r| > 1 + tol.
DensityOperator BlochToDensity(const BlochVector& r);

BlochVector DensityToBloch(const DensityOperator& rho);

// Tr(rho E_k), clamped to [0, 1].
double BornProbability(const DensityOperator& rho, const BinaryMeasurement& m, int k);

// Tr|a - b|, the sum of absolute eigenvalues of the difference.
double TraceDistance(const DensityOperator& a, const DensityOperator& b);

// (1 - eps) rho + eps I/2.
DensityOperator Depolarize(const DensityOperator& rho, double eps);

// weight_a * a + (1 - weight_a) * b, weight_a in [0, 1].
DensityOperator Mix(const DensityOperator& a, const DensityOperator& b, double weight_a);

}  // namespace pomlab

#endif  // POMLAB_QUBIT_H_
