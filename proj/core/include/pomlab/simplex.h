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

#ifndef POMLAB_SIMPLEX_H_
#define POMLAB_SIMPLEX_H_

#include <vector>

namespace pomlab {

// maximize objective . x  subject to  rows x = rhs,  x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;

  void AddEquality(std::vector<double> coefficients, double value);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> x;
};

// Dense two-phase tableau simplex with Bland's rule, so pivot order (and
// therefore the returned vertex) is a deterministic function of the input.
// Redundant equality rows are detected after phase one and dropped.
LpSolution SolveLinearProgram(const LinearProgram& lp);

}  // namespace pomlab

#endif  // POMLAB_SIMPLEX_H_
