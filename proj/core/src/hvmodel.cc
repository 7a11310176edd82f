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

#include "pomlab/hvmodel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pomlab/error.h"

namespace pomlab {
namespace {

constexpr double kTableTolerance = 1e-12;

std::vector<double> InducedLambda(const HiddenVariableModel& h, const PreparationMixture& w) {
  if (w.size() != StringCount(h.n())) {
    throw Error(ErrorCode::kInvalidModel, "mixture has " + std::to_string(w.size()) +
                                              " weights, expected " +
                                              std::to_string(StringCount(h.n())));
  }
  std::vector<double> out(static_cast<std::size_t>(h.lambdas()), 0.0);
  for (std::uint32_t x = 0; x < w.size(); ++x) {
    if (w[x] == 0.0) continue;
    for (int l = 0; l < h.lambdas(); ++l) out[static_cast<std::size_t>(l)] += w[x] * h.prep(x, l);
  }
  return out;
}

}  // namespace

HiddenVariableModel::HiddenVariableModel(int n, int lambdas, std::vector<double> prep,
                                         std::vector<double> resp)
    : n_(n), lambdas_(lambdas), prep_(std::move(prep)), resp_(std::move(resp)) {
  if (n < 1 || n > kMaxBits || lambdas < 1) {
    throw Error(ErrorCode::kInvalidModel, "need 1 <= n <= 16 and at least one lambda");
  }
  const auto l_count = static_cast<std::size_t>(lambdas);
  if (prep_.size() != StringCount(n) * l_count ||
      resp_.size() != l_count * static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kInvalidModel, "prep or resp table has the wrong shape");
  }
  for (std::uint32_t x = 0; x < StringCount(n); ++x) {
    double sum = 0.0;
    for (std::size_t l = 0; l < l_count; ++l) {
      const double v = prep_[x * l_count + l];
      if (!(v >= -kTableTolerance && v <= 1.0 + kTableTolerance)) {
        throw Error(ErrorCode::kInvalidModel, "prep entry outside [0, 1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kTableTolerance) {
      throw Error(ErrorCode::kInvalidModel, "prep row " + RenderBits(n, x) + " sums to " +
                                                std::to_string(sum));
    }
  }
  for (double v : resp_) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::kInvalidModel, "resp entry outside [0, 1]");
  }
}

double OperationalTable::Success() const {
  double sum = 0.0;
  for (std::size_t x = 0; x < outcome0.size(); ++x) {
    for (int y = 1; y <= n; ++y) {
      const double p0 = outcome0[x][static_cast<std::size_t>(y - 1)];
      sum += ((x >> (y - 1)) & 1u) ? 1.0 - p0 : p0;
    }
  }
  return sum / (static_cast<double>(outcome0.size()) * n);
}

OperationalTable Reproduce(const HiddenVariableModel& h) {
  OperationalTable t;
  t.n = h.n();
  t.outcome0.assign(StringCount(h.n()), std::vector<double>(static_cast<std::size_t>(h.n()), 0.0));
  for (std::uint32_t x = 0; x < StringCount(h.n()); ++x) {
    for (int y = 1; y <= h.n(); ++y) {
      double p = 0.0;
      for (int l = 0; l < h.lambdas(); ++l) p += h.resp(l, y) * h.prep(x, l);
      t.outcome0[x][static_cast<std::size_t>(y - 1)] = p;
    }
  }
  return t;
}

NcCheck CheckPreparationNc(const HiddenVariableModel& h,
                           const std::vector<EquivalentPreparations>& classes) {
  NcCheck out;
  for (const auto& pair : classes) {
    const auto a = InducedLambda(h, pair.first);
    const auto b = InducedLambda(h, pair.second);
    double tv = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) tv += std::abs(a[l] - b[l]);
    out.max_deviation = std::max(out.max_deviation, 0.5 * tv);
  }
  out.holds = out.max_deviation <= kNcTolerance;
  return out;
}

bool CheckMeasurementNc(const HiddenVariableModel& h,
                        const std::vector<std::pair<int, int>>& pairs) {
  const OperationalTable t = Reproduce(h);
  bool holds = true;
  for (const auto& [y1, y2] : pairs) {
    if (y1 < 1 || y1 > h.n() || y2 < 1 || y2 > h.n()) {
      throw Error(ErrorCode::kInvalidEquivalenceClaim, "measurement index out of range");
    }
    for (std::uint32_t x = 0; x < StringCount(h.n()); ++x) {
      if (std::abs(t.outcome0[x][static_cast<std::size_t>(y1 - 1)] -
                   t.outcome0[x][static_cast<std::size_t>(y2 - 1)]) > kNcTolerance) {
        throw Error(ErrorCode::kInvalidEquivalenceClaim,
                    "measurements " + std::to_string(y1) + " and " + std::to_string(y2) +
                        " differ on preparation " + RenderBits(h.n(), x));
      }
    }
    for (int l = 0; l < h.lambdas(); ++l) {
      if (std::abs(h.resp(l, y1) - h.resp(l, y2)) > kNcTolerance) holds = false;
    }
  }
  return holds;
}

NcCheck HvParityCondition(const HiddenVariableModel& h) {
  NcCheck out;
  const std::uint32_t rows = StringCount(h.n());
  const std::vector<ParityMask> masks =
      h.n() >= 2 ? AllParityMasks(h.n()) : std::vector<ParityMask>{};
  for (int l = 0; l < h.lambdas(); ++l) {
    double total = 0.0;
    for (std::uint32_t x = 0; x < rows; ++x) total += h.prep(x, l);
    if (total <= 0.0) continue;
    for (const ParityMask& s : masks) {
      double balance = 0.0;
      for (std::uint32_t x = 0; x < rows; ++x) balance += Character(s.index(), x) * h.prep(x, l);
      out.max_deviation = std::max(out.max_deviation, std::abs(balance) / total);
    }
  }
  out.holds = out.max_deviation <= kNcTolerance;
  return out;
}

double HvOptimalSuccess(const HiddenVariableModel& h) {
  const std::uint32_t rows = StringCount(h.n());
  double sum = 0.0;
  for (int l = 0; l < h.lambdas(); ++l) {
    for (int y = 1; y <= h.n(); ++y) {
      double weight[2] = {0.0, 0.0};
      for (std::uint32_t x = 0; x < rows; ++x) weight[(x >> (y - 1)) & 1u] += h.prep(x, l);
      sum += std::max(weight[0], weight[1]);
    }
  }
  // sum_lambda p(lambda) max_b p(x_y = b | lambda) = sum_lambda max_b sum_{x_y=b} p(lambda|x) / 2^n.
  return sum / (static_cast<double>(rows) * h.n());
}

std::vector<EquivalentPreparations> ParityMixtureClasses(int n) {
  std::vector<EquivalentPreparations> out;
  if (n < 2) return out;
  const std::uint32_t rows = StringCount(n);
  const double w = 1.0 / static_cast<double>(rows / 2);
  for (const ParityMask& s : AllParityMasks(n)) {
    EquivalentPreparations pair{PreparationMixture(rows, 0.0), PreparationMixture(rows, 0.0)};
    for (std::uint32_t x = 0; x < rows; ++x) {
      (DotParity(x, s.index()) ? pair.second : pair.first)[x] = w;
    }
    out.push_back(std::move(pair));
  }
  return out;
}

HiddenVariableModel EmbedClassicalStrategy(const ClassicalEncoding& e, const Decoder& d) {
  if (d.n() != e.n() || d.alphabet() != e.alphabet()) {
    throw Error(ErrorCode::kInvalidModel, "decoder shape does not match the encoding");
  }
  std::vector<double> resp(static_cast<std::size_t>(e.alphabet()) * static_cast<std::size_t>(e.n()));
  for (int m = 0; m < e.alphabet(); ++m) {
    for (int y = 1; y <= e.n(); ++y) {
      resp[static_cast<std::size_t>(m * e.n() + y - 1)] = d(m, y) == 0 ? 1.0 : 0.0;
    }
  }
  return HiddenVariableModel(e.n(), e.alphabet(), e.table(), std::move(resp));
}

HiddenVariableModel FullRevelationModel(int n) {
  CheckBitCount(n);
  const std::uint32_t rows = StringCount(n);
  std::vector<double> prep(static_cast<std::size_t>(rows) * rows, 0.0);
  std::vector<double> resp(static_cast<std::size_t>(rows) * static_cast<std::size_t>(n));
  for (std::uint32_t x = 0; x < rows; ++x) {
    prep[static_cast<std::size_t>(x) * rows + x] = 1.0;
    for (int y = 1; y <= n; ++y) {
      resp[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y - 1)] =
          ((x >> (y - 1)) & 1u) ? 0.0 : 1.0;
    }
  }
  return HiddenVariableModel(n, static_cast<int>(rows), std::move(prep), std::move(resp));
}

}  // namespace pomlab
