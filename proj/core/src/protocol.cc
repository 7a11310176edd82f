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

#include "pomlab/protocol.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pomlab/error.h"

namespace pomlab {

void QuantumProtocol::Validate() const {
  if (n < 1 || n > kMaxBits) {
    throw Error(ErrorCode::kMalformedProtocol, "bit count " + std::to_string(n) + " out of range");
  }
  if (preparations.size() != StringCount(n)) {
    throw Error(ErrorCode::kMalformedProtocol,
                "expected " + std::to_string(StringCount(n)) + " preparations, got " +
                    std::to_string(preparations.size()));
  }
  if (measurements.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kMalformedProtocol,
                "expected " + std::to_string(n) + " measurements, got " +
                    std::to_string(measurements.size()));
  }
}

double NcBound(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  return static_cast<double>(n + 1) / (2.0 * n);
}

QuantumProtocol StandardProtocol(int n) {
  if (n != 2 && n != 3) {
    throw Error(ErrorCode::kUnsupportedN,
                "standard protocols exist for n = 2 and n = 3, got " + std::to_string(n));
  }
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  QuantumProtocol p;
  p.n = n;
  for (std::uint32_t x = 0; x < StringCount(n); ++x) {
    auto sign = [&](int i) { return ((x >> i) & 1u) ? -c : c; };
    p.preparations.push_back(BlochToDensity({sign(0), sign(1), n == 3 ? sign(2) : 0.0}));
  }
  p.measurements.push_back(BinaryMeasurement::AlongAxis({1, 0, 0}));
  p.measurements.push_back(BinaryMeasurement::AlongAxis({0, 1, 0}));
  if (n == 3) p.measurements.push_back(BinaryMeasurement::AlongAxis({0, 0, 1}));
  return p;
}

SuccessReport SuccessProbability(const QuantumProtocol& protocol) {
  protocol.Validate();
  const int n = protocol.n;
  SuccessReport report;
  report.per_pair.assign(StringCount(n), std::vector<double>(static_cast<std::size_t>(n)));
  double sum = 0.0;
  for (std::uint32_t x = 0; x < StringCount(n); ++x) {
    for (int y = 1; y <= n; ++y) {
      const int bit = static_cast<int>((x >> (y - 1)) & 1u);
      const double p = BornProbability(protocol.preparations[x], protocol.measurement(y), bit);
      report.per_pair[x][static_cast<std::size_t>(y - 1)] = p;
      sum += p;
    }
  }
  report.overall = sum / (static_cast<double>(StringCount(n)) * n);
  report.nc_bound = NcBound(n);
  report.violation_margin = report.overall - report.nc_bound;
  return report;
}

DensityOperator ParityMixture(const QuantumProtocol& protocol, const ParityMask& s, int b) {
  protocol.Validate();
  if (s.size() != protocol.n) {
    throw Error(ErrorCode::kInvalidMask, "mask " + s.ToString() + " has length " +
                                             std::to_string(s.size()) + ", protocol has n = " +
                                             std::to_string(protocol.n));
  }
  if (b != 0 && b != 1) throw Error(ErrorCode::kInvalidArgument, "parity must be 0 or 1");
  ComplexMatrix2 sum;
  for (std::uint32_t x = 0; x < StringCount(protocol.n); ++x) {
    if (DotParity(x, s.index()) == b) sum += protocol.preparations[x].matrix();
  }
  sum *= 1.0 / static_cast<double>(StringCount(protocol.n - 1));
  return DensityOperator::FromMatrix(sum);
}

LeakageReport ParityLeakage(const QuantumProtocol& protocol) {
  protocol.Validate();
  LeakageReport report;
  for (const ParityMask& s : AllParityMasks(protocol.n)) {
    const double td =
        TraceDistance(ParityMixture(protocol, s, 0), ParityMixture(protocol, s, 1));
    const double p = 0.5 + 0.25 * td;
    report.per_parity.push_back({s, p});
    report.max_leakage = std::max(report.max_leakage, p);
  }
  return report;
}

}  // namespace pomlab
