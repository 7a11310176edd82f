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

#include "pomlab/qubit.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pomlab/error.h"

namespace pomlab {

ComplexMatrix2 ComplexMatrix2::Adjoint() const {
  return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

bool ComplexMatrix2::IsFinite() const {
  return std::all_of(e_.begin(), e_.end(), [](Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

double ComplexMatrix2::HermiticityDeviation() const {
  return MaxAbsDifference(*this, Adjoint());
}

ComplexMatrix2& ComplexMatrix2::operator+=(const ComplexMatrix2& o) {
  for (int i = 0; i < 4; ++i) e_[i] += o.e_[i];
  return *this;
}

ComplexMatrix2& ComplexMatrix2::operator-=(const ComplexMatrix2& o) {
  for (int i = 0; i < 4; ++i) e_[i] -= o.e_[i];
  return *this;
}

ComplexMatrix2& ComplexMatrix2::operator*=(Complex k) {
  for (auto& v : e_) v *= k;
  return *this;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

double MaxAbsDifference(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.e_[i] - b.e_[i]));
  return worst;
}

std::array<double, 2> HermitianEigenvalues(const ComplexMatrix2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double half_trace = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(off));
  return {half_trace - radius, half_trace + radius};
}

double BlochVector::Norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityOperator::DensityOperator() : matrix_(0.5, 0.0, 0.0, 0.5) {}

DensityOperator DensityOperator::FromMatrix(const ComplexMatrix2& m) {
  if (!m.IsFinite()) {
    throw Error(ErrorCode::kInvalidDensity, "non-finite entries");
  }
  if (m.HermiticityDeviation() > kQubitTolerance) {
    throw Error(ErrorCode::kInvalidDensity, "matrix is not Hermitian");
  }
  const Complex trace = m.Trace();
  if (std::abs(trace - 1.0) > kQubitTolerance) {
    throw Error(ErrorCode::kInvalidDensity,
                "trace " + std::to_string(trace.real()) + " differs from 1");
  }
  if (HermitianEigenvalues(m)[0] < -kQubitTolerance) {
    throw Error(ErrorCode::kInvalidDensity, "matrix is not positive semidefinite");
  }
  return DensityOperator(m);
}

double DensityOperator::Purity() const { return (matrix_ * matrix_).Trace().real(); }

BinaryMeasurement::BinaryMeasurement() : effect0_(1.0, 0.0, 0.0, 0.0) {}

BinaryMeasurement BinaryMeasurement::FromEffect(const ComplexMatrix2& effect0) {
  if (!effect0.IsFinite()) {
    throw Error(ErrorCode::kInvalidMeasurement, "non-finite effect");
  }
  if (effect0.HermiticityDeviation() > kQubitTolerance) {
    throw Error(ErrorCode::kInvalidMeasurement, "effect is not Hermitian");
  }
  const auto ev = HermitianEigenvalues(effect0);
  if (ev[0] < -kQubitTolerance || ev[1] > 1.0 + kQubitTolerance) {
    throw Error(ErrorCode::kInvalidMeasurement, "effect spectrum outside [0, 1]");
  }
  return BinaryMeasurement(effect0);
}

BinaryMeasurement BinaryMeasurement::AlongAxis(const BlochVector& axis) {
  if (!(axis.Norm() <= 1.0 + kQubitTolerance)) {
    throw Error(ErrorCode::kInvalidMeasurement, "axis length exceeds 1");
  }
  const ComplexMatrix2 e = 0.5 * (ComplexMatrix2::Identity() + axis.x * ComplexMatrix2::PauliX() +
                                  axis.y * ComplexMatrix2::PauliY() +
                                  axis.z * ComplexMatrix2::PauliZ());
  return FromEffect(e);
}

BlochVector BinaryMeasurement::Axis() const {
  return {(effect0_ * ComplexMatrix2::PauliX()).Trace().real(),
          (effect0_ * ComplexMatrix2::PauliY()).Trace().real(),
          (effect0_ * ComplexMatrix2::PauliZ()).Trace().real()};
}

DensityOperator BlochToDensity(const BlochVector& r) {
  const double norm = r.Norm();
  if (!(norm <= 1.0 + kQubitTolerance)) {
    throw Error(ErrorCode::kInvalidBlochVector,
                "Bloch vector norm " + std::to_string(norm) + " exceeds 1");
  }
  const ComplexMatrix2 m(0.5 * (1.0 + r.z), Complex(0.5 * r.x, -0.5 * r.y),
                         Complex(0.5 * r.x, 0.5 * r.y), 0.5 * (1.0 - r.z));
  return DensityOperator::FromMatrix(m);
}

BlochVector DensityToBloch(const DensityOperator& rho) {
  const ComplexMatrix2& m = rho.matrix();
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

double BornProbability(const DensityOperator& rho, const BinaryMeasurement& m, int k) {
  if (k != 0 && k != 1) {
    throw Error(ErrorCode::kInvalidArgument, "outcome must be 0 or 1");
  }
  const double p0 = (rho.matrix() * m.effect0()).Trace().real();
  const double p = k == 0 ? p0 : 1.0 - p0;
  return std::clamp(p, 0.0, 1.0);
}

double TraceDistance(const DensityOperator& a, const DensityOperator& b) {
  const auto ev = HermitianEigenvalues(a.matrix() - b.matrix());
  return std::abs(ev[0]) + std::abs(ev[1]);
}

DensityOperator Depolarize(const DensityOperator& rho, double eps) {
  return Mix(DensityOperator(), rho, eps);
}

DensityOperator Mix(const DensityOperator& a, const DensityOperator& b, double weight_a) {
  if (!(weight_a >= 0.0 && weight_a <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mixing weight outside [0, 1]");
  }
  return DensityOperator::FromMatrix(weight_a * a.matrix() + (1.0 - weight_a) * b.matrix());
}

}  // namespace pomlab
