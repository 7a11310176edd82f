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

#ifndef POMLAB_PROTOCOL_H_
#define POMLAB_PROTOCOL_H_

#include <cstdint>
#include <vector>

#include "pomlab/bits.h"
#include "pomlab/qubit.h"

namespace pomlab {

// A parity-oblivious multiplexing protocol with a qubit message.
// preparations[x] is Alice's state for the string with index x;
// measurements[y - 1] is Bob's measurement when asked for bit y, and its
// outcome k is reported directly as Bob's guess b.
struct QuantumProtocol {
  int n = 0;
  std::vector<DensityOperator> preparations;
  std::vector<BinaryMeasurement> measurements;

  // Throws malformed-protocol when either table is incomplete.
  void Validate() const;
  const BinaryMeasurement& measurement(int y) const {
    return measurements[static_cast<std::size_t>(y - 1)];
  }
};

struct SuccessReport {
  double overall = 0.0;
  // per_pair[x][y - 1] = p(b = x_y | P_x, M_y).
  std::vector<std::vector<double>> per_pair;
  double nc_bound = 0.0;
  double violation_margin = 0.0;
};

struct LeakageReport {
  struct Entry {
    ParityMask mask;
    double probability;
  };
  std::vector<Entry> per_parity;  // in AllParityMasks order
  double max_leakage = 0.5;
};

// (n + 1) / 2n. Throws invalid-argument for n < 1.
double NcBound(int n);

// The Bloch-cube protocols: x_i = 0 maps to a + sign on axis i, and the +
// outcome of each axis measurement is read as b = 0. Throws unsupported-n
// unless n is 2 or 3.
QuantumProtocol StandardProtocol(int n);

SuccessReport SuccessProbability(const QuantumProtocol& protocol);

// Uniform mixture of the preparations whose s-parity equals b.
// Throws invalid-mask when the mask length differs from protocol.n.
DensityOperator ParityMixture(const QuantumProtocol& protocol, const ParityMask& s, int b);

// 1/2 + Tr|rho_{s,0} - rho_{s,1}| / 4 for every s in Par.
LeakageReport ParityLeakage(const QuantumProtocol& protocol);

struct OptimizerOptions {
  int restarts = 20;
  int iterations = 200;
  double penalty = 10.0;
  std::uint64_t seed = 1;
};

struct OptimizerResult {
  QuantumProtocol protocol;
  SuccessReport success;
  LeakageReport leakage;
  // Penalized objective success - penalty * sum_s Tr|rho_{s,0} - rho_{s,1}|.
  double objective = 0.0;
  int best_restart = 0;
};

// Multi-start search over pure-state preparations and projective axes for
// the largest success probability subject to parity obliviousness.
// Each restart runs coordinate descent on the penalized objective, then a
// coordinate search whose trial points are pulled back onto the
// oblivious set by damped Gauss-Newton steps on the Bloch-space
// constraints. Restarts whose max leakage stays within 0.5 + 1e-6 are
// preferred. iterations == 0 returns the first starting point untouched.
// Throws unsupported-n unless n is 2 or 3, invalid-argument when
// restarts < 1 or iterations < 0.
OptimizerResult OptimizeProtocol(int n, const OptimizerOptions& options = {});

// Leakage tolerance the optimizer guarantees when feasible restarts exist.
inline constexpr double kOptimizerLeakageSlack = 1e-6;

}  // namespace pomlab

#endif  // POMLAB_PROTOCOL_H_
