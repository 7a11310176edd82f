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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pomlab/error.h"
#include "test_support.h"

namespace pomlab {
namespace {

using testing::RandomBloch;
using testing::RandomUnit;
using testing::ToEigen;

const double kCos2Pi8 = std::pow(std::cos(M_PI / 8), 2);

TEST(BlochToDensity, CenterIsMaximallyMixed) {
  const DensityOperator rho = BlochToDensity({0, 0, 0});
  EXPECT_LT(MaxAbsDifference(rho.matrix(), ComplexMatrix2::Identity() * 0.5), 1e-15);
}

TEST(BlochToDensity, DiagonalStatePure) {
  const BlochVector r{1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0};
  const DensityOperator rho = BlochToDensity(r);
  const auto& m = rho.matrix();
  EXPECT_NEAR((m * ComplexMatrix2::PauliX()).Trace().real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR((m * ComplexMatrix2::PauliY()).Trace().real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(rho.Purity(), 1.0, 1e-12);
}

TEST(BlochToDensity, PoleIsComputationalState) {
  const DensityOperator rho = BlochToDensity({0, 0, 1});
  EXPECT_LT(MaxAbsDifference(rho.matrix(), {1.0, 0.0, 0.0, 0.0}), 1e-15);
}

TEST(BlochToDensity, RejectsOutsideBall) {
  try {
    BlochToDensity({0.8, 0.8, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidBlochVector);
  }
  EXPECT_NO_THROW(BlochToDensity({0, 0, 1 + 5e-13}));
}

TEST(DensityToBloch, Examples) {
  const BlochVector c = DensityToBloch(DensityOperator());
  EXPECT_NEAR(c.Norm(), 0.0, 1e-15);
  const BlochVector z = DensityToBloch(BlochToDensity({0, 0, 1}));
  EXPECT_NEAR(z.z, 1.0, 1e-15);
  const double k = 1 / std::sqrt(3.0);
  const BlochVector r = DensityToBloch(BlochToDensity({k, k, k}));
  EXPECT_NEAR(r.x, k, 1e-12);
  EXPECT_NEAR(r.y, k, 1e-12);
  EXPECT_NEAR(r.z, k, 1e-12);
}

TEST(DensityOperator, FromMatrixValidates) {
  EXPECT_THROW(DensityOperator::FromMatrix({1.0, 0.5, 0.0, 0.0}), Error);           // not Hermitian
  EXPECT_THROW(DensityOperator::FromMatrix({0.6, 0.0, 0.0, 0.6}), Error);           // trace
  EXPECT_THROW(DensityOperator::FromMatrix({1.2, 0.0, 0.0, -0.2}), Error);          // negative
  EXPECT_THROW(DensityOperator::FromMatrix({NAN, 0.0, 0.0, 1.0}), Error);
  EXPECT_NO_THROW(DensityOperator::FromMatrix({0.5, 0.5, 0.5, 0.5}));
  try {
    DensityOperator::FromMatrix({1.2, 0.0, 0.0, -0.2});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDensity);
  }
}

TEST(BinaryMeasurement, Validation) {
  EXPECT_THROW(BinaryMeasurement::FromEffect({1.5, 0.0, 0.0, 0.0}), Error);
  EXPECT_THROW(BinaryMeasurement::FromEffect({0.5, 1.0, 0.0, 0.5}), Error);
  EXPECT_THROW(BinaryMeasurement::AlongAxis({1.0, 1.0, 0.0}), Error);
  const BinaryMeasurement unsharp = BinaryMeasurement::AlongAxis({0.0, 0.5, 0.0});
  EXPECT_NEAR(unsharp.Axis().y, 0.5, 1e-15);
  try {
    BinaryMeasurement::FromEffect({-0.1, 0.0, 0.0, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidMeasurement);
  }
}

TEST(BornProbability, Examples) {
  const BinaryMeasurement sx = BinaryMeasurement::AlongAxis({1, 0, 0});
  EXPECT_NEAR(BornProbability(DensityOperator(), sx, 0), 0.5, 1e-15);
  const double h = 1 / std::sqrt(2.0);
  EXPECT_NEAR(BornProbability(BlochToDensity({h, h, 0}), sx, 0), kCos2Pi8, 1e-12);
  EXPECT_NEAR(kCos2Pi8, 0.8535533906, 1e-10);
  const double k = 1 / std::sqrt(3.0);
  const BinaryMeasurement sz;
  EXPECT_NEAR(BornProbability(BlochToDensity({k, k, k}), sz, 0), 0.7886751346, 1e-10);
}

TEST(TraceDistance, Examples) {
  const DensityOperator up = BlochToDensity({0, 0, 1});
  const DensityOperator down = BlochToDensity({0, 0, -1});
  EXPECT_NEAR(TraceDistance(up, up), 0.0, 1e-15);
  EXPECT_NEAR(TraceDistance(up, down), 2.0, 1e-12);
  // Difference diag(1/2, -1/2): eigenvalues from Eigen.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(ToEigen(up.matrix() - DensityOperator().matrix()));
  EXPECT_NEAR(es.eigenvalues().cwiseAbs().sum(), 1.0, 1e-12);
  EXPECT_NEAR(TraceDistance(DensityOperator(), up), 1.0, 1e-12);
}

TEST(QubitProperties, SpectrumOfBlochState) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const BlochVector r = RandomBloch(rng);
    const auto ev = HermitianEigenvalues(BlochToDensity(r).matrix());
    EXPECT_NEAR(ev[0], (1 - r.Norm()) / 2, 1e-12);
    EXPECT_NEAR(ev[1], (1 + r.Norm()) / 2, 1e-12);
  }
}

TEST(QubitProperties, BornIsAffineInBloch) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    const BlochVector r = RandomBloch(rng);
    const BlochVector a = RandomUnit(rng);
    const DensityOperator rho = BlochToDensity(r);
    const BinaryMeasurement m = BinaryMeasurement::AlongAxis(a);
    EXPECT_NEAR(BornProbability(rho, m, 0), 0.5 * (1 + r.Dot(a)), 1e-10);
    EXPECT_NEAR(BornProbability(rho, m, 0) + BornProbability(rho, m, 1), 1.0, 1e-12);
  }
}

TEST(QubitProperties, TraceDistanceMatchesEigenAndIsAMetric) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    const DensityOperator a = BlochToDensity(RandomBloch(rng));
    const DensityOperator b = BlochToDensity(RandomBloch(rng));
    const DensityOperator c = BlochToDensity(RandomBloch(rng));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(ToEigen(a.matrix() - b.matrix()));
    EXPECT_NEAR(TraceDistance(a, b), es.eigenvalues().cwiseAbs().sum(), 1e-12);
    EXPECT_NEAR(TraceDistance(a, b), TraceDistance(b, a), 1e-15);
    EXPECT_LE(TraceDistance(a, c), TraceDistance(a, b) + TraceDistance(b, c) + 1e-10);
  }
}

TEST(QubitProperties, UnsharpMeasurementsSumToOne) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const DensityOperator rho = BlochToDensity(RandomBloch(rng));
    const BinaryMeasurement m = BinaryMeasurement::AlongAxis(RandomBloch(rng));
    EXPECT_NEAR(BornProbability(rho, m, 0) + BornProbability(rho, m, 1), 1.0, 1e-12);
  }
}

TEST(Depolarize, ShrinksBlochVector) {
  const DensityOperator rho = Depolarize(BlochToDensity({0, 0.6, 0.8}), 0.25);
  const BlochVector r = DensityToBloch(rho);
  EXPECT_NEAR(r.y, 0.45, 1e-12);
  EXPECT_NEAR(r.z, 0.6, 1e-12);
}

TEST(Mix, ConvexCombination) {
  const DensityOperator m = Mix(BlochToDensity({0, 0, 1}), BlochToDensity({0, 0, -1}), 0.25);
  EXPECT_NEAR(DensityToBloch(m).z, -0.5, 1e-12);
}

}  // namespace
}  // namespace pomlab
