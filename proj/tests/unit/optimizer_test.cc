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


#include <gtest/gtest.h>

#include <cmath>

#include "pomlab/error.h"
#include "pomlab/protocol.h"

namespace pomlab {
namespace {

TEST(Optimizer, FindsTwoBitOptimum) {
  const OptimizerResult r = OptimizeProtocol(2);
  EXPECT_GE(r.success.overall, 0.853553 - 1e-4);
  EXPECT_LE(r.success.overall, std::pow(std::cos(M_PI / 8), 2) + 1e-9);
  EXPECT_LE(r.leakage.max_leakage, 0.5 + kOptimizerLeakageSlack);
}

TEST(Optimizer, ReachesCubeValueForThreeBits) {
  OptimizerOptions opt;
  opt.restarts = 8;
  const OptimizerResult r = OptimizeProtocol(3, opt);
  EXPECT_GE(r.success.overall, 0.788675 - 1e-4);
  EXPECT_LE(r.leakage.max_leakage, 0.5 + kOptimizerLeakageSlack);
}

TEST(Optimizer, LeakageNeverExceedsSlack) {
  for (std::uint64_t seed : {2u, 3u, 4u}) {
    OptimizerOptions opt;
    opt.restarts = 3;
    opt.iterations = 40;
    opt.seed = seed;
    EXPECT_LE(OptimizeProtocol(2, opt).leakage.max_leakage, 0.5 + kOptimizerLeakageSlack);
  }
}

TEST(Optimizer, ZeroIterationsReturnsStart) {
  OptimizerOptions opt;
  opt.iterations = 0;
  opt.restarts = 4;
  const OptimizerResult a = OptimizeProtocol(2, opt);
  opt.restarts = 1;
  const OptimizerResult b = OptimizeProtocol(2, opt);
  EXPECT_EQ(a.best_restart, 0);
  for (std::size_t x = 0; x < 4; ++x) {
    EXPECT_EQ(MaxAbsDifference(a.protocol.preparations[x].matrix(), b.protocol.preparations[x].matrix()), 0.0);
  }
}

TEST(Optimizer, Deterministic) {
  OptimizerOptions opt;
  opt.restarts = 4;
  opt.iterations = 50;
  const OptimizerResult a = OptimizeProtocol(2, opt);
  const OptimizerResult b = OptimizeProtocol(2, opt);
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(a.best_restart, b.best_restart);
}

TEST(Optimizer, ValidatesArguments) {
  OptimizerOptions opt;
  opt.restarts = 0;
  EXPECT_THROW(OptimizeProtocol(2, opt), Error);
  opt.restarts = 1;
  opt.iterations = -1;
  EXPECT_THROW(OptimizeProtocol(2, opt), Error);
  EXPECT_THROW(OptimizeProtocol(4), Error);
}

}  // namespace
}  // namespace pomlab
