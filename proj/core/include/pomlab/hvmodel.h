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

#ifndef POMLAB_HVMODEL_H_
#define POMLAB_HVMODEL_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "pomlab/bits.h"
#include "pomlab/classical.h"

namespace pomlab {

// A finite ontological model of a POM protocol: prep(x, lambda) = p(lambda|P_x)
// and resp(lambda, y) = p(k = 0 | lambda, M_y).
class HiddenVariableModel {
 public:
  // Throws invalid-model on shape errors, prep rows not summing to 1 within
  // 1e-12, or entries outside [0, 1].
  HiddenVariableModel(int n, int lambdas, std::vector<double> prep, std::vector<double> resp);

  int n() const { return n_; }
  int lambdas() const { return lambdas_; }
  double prep(std::uint32_t x, int lambda) const {
    return prep_[x * static_cast<std::size_t>(lambdas_) + static_cast<std::size_t>(lambda)];
  }
  double resp(int lambda, int y) const {
    return resp_[static_cast<std::size_t>(lambda) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(y - 1)];
  }
  const std::vector<double>& prep_table() const { return prep_; }
  const std::vector<double>& resp_table() const { return resp_; }

 private:
  int n_;
  int lambdas_;
  std::vector<double> prep_;  // [x][lambda]
  std::vector<double> resp_;  // [lambda][y - 1]
};

// p(k = 0 | P_x, M_y), stored [x][y - 1].
struct OperationalTable {
  int n = 0;
  std::vector<std::vector<double>> outcome0;

  // Average over (x, y) of p(b = x_y), reading outcome k as the guess.
  double Success() const;
};

OperationalTable Reproduce(const HiddenVariableModel& h);

// Weights over the 2^n preparations defining a mixed procedure.
using PreparationMixture = std::vector<double>;

struct EquivalentPreparations {
  PreparationMixture first;
  PreparationMixture second;
};

struct NcCheck {
  bool holds = false;
  double max_deviation = 0.0;
};

// Tolerance used by the noncontextuality checkers.
inline constexpr double kNcTolerance = 1e-9;

// For each declared pair, the total-variation distance between the induced
// lambda distributions; holds when every distance is <= 1e-9.
NcCheck CheckPreparationNc(const HiddenVariableModel& h,
                           const std::vector<EquivalentPreparations>& classes);

// Operationally identical measurements must share a response column.
// Throws invalid-equivalence-claim if a declared pair (1-based y indices)
// differs operationally by more than 1e-9.
bool CheckMeasurementNc(const HiddenVariableModel& h,
                        const std::vector<std::pair<int, int>>& pairs);

// Posterior parity balance given lambda, over every s in Par and every
// lambda with nonzero weight under the uniform prior on x.
NcCheck HvParityCondition(const HiddenVariableModel& h);

// Success when Bob learns lambda exactly and guesses the likelier x_y.
double HvOptimalSuccess(const HiddenVariableModel& h);

// The (s, 0) / (s, 1) uniform parity mixtures for every s in Par.
std::vector<EquivalentPreparations> ParityMixtureClasses(int n);

// lambda = m, response(lambda, y) = [decoder(m, y) == 0].
HiddenVariableModel EmbedClassicalStrategy(const ClassicalEncoding& e, const Decoder& d);

// lambda = x with identity preparations and resp(lambda, y) = 1 - lambda_y.
HiddenVariableModel FullRevelationModel(int n);

}  // namespace pomlab

#endif  // POMLAB_HVMODEL_H_
