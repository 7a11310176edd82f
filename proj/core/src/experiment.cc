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

#include "pomlab/experiment.h"

#include <algorithm>
#include <boost/random/binomial_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <cmath>
#include <string>

#include "pomlab/error.h"
#include "pomlab/hermitian.h"
#include "pomlab/parallel.h"
#include "pomlab/rng.h"

namespace pomlab {
namespace {

constexpr std::uint32_t kJitterStream = 0x4A17u;
constexpr std::uint32_t kCountStream = 0xC000u;
constexpr std::uint32_t kTomographyStream = 0x7000u;
constexpr std::uint32_t kBootstrapStream = 0xB007u;

std::uint64_t DrawBinomial(Philox4x32& rng, std::uint64_t trials, double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  boost::random::binomial_distribution<std::int64_t, double> dist(
      static_cast<std::int64_t>(trials), p);
  return static_cast<std::uint64_t>(dist(rng));
}

BlochVector Normalized(const BlochVector& v) { return v * (1.0 / v.Norm()); }

BlochVector Cross(const BlochVector& a, const BlochVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

BlochVector JitterAxis(const BlochVector& axis, double sigma, Philox4x32& rng) {
  const double length = axis.Norm();
  if (length == 0.0) return axis;
  const BlochVector u = axis * (1.0 / length);
  const BlochVector helper = std::abs(u.x) < 0.9 ? BlochVector{1, 0, 0} : BlochVector{0, 1, 0};
  const BlochVector e1 = Normalized(helper - u * helper.Dot(u));
  const BlochVector e2 = Cross(u, e1);
  boost::random::normal_distribution<double> normal(0.0, sigma);
  const double g1 = normal(rng);
  const double g2 = normal(rng);
  const double angle = std::hypot(g1, g2);
  if (angle == 0.0) return axis;
  const BlochVector dir = (e1 * g1 + e2 * g2) * (1.0 / angle);
  BlochVector tilted = u * std::cos(angle) + dir * std::sin(angle);
  tilted = tilted * (1.0 / std::max(1.0, tilted.Norm()));
  return tilted * length;
}

DensityOperator Average(const std::vector<DensityOperator>& states, std::uint32_t s, int b) {
  ComplexMatrix2 sum;
  double count = 0.0;
  for (std::uint32_t x = 0; x < states.size(); ++x) {
    if (DotParity(x, s) != b) continue;
    sum += states[x].matrix();
    count += 1.0;
  }
  sum *= 1.0 / count;
  return DensityOperator::FromMatrix(sum);
}

double LeakageFromCounts(const std::vector<std::array<AxisCounts, 3>>& per_x, std::uint32_t s) {
  std::vector<DensityOperator> states;
  states.reserve(per_x.size());
  for (const auto& axes : per_x) states.push_back(Tomography(axes));
  return 0.5 + 0.25 * TraceDistance(Average(states, s, 0), Average(states, s, 1));
}

}  // namespace

void NoiseModel::Validate() const {
  if (!(depolarizing_strength >= 0.0 && depolarizing_strength <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "depolarizing strength must lie in [0, 1]");
  }
  if (!(axis_jitter >= 0.0) || !std::isfinite(axis_jitter)) {
    throw Error(ErrorCode::kInvalidArgument, "axis jitter must be a nonnegative angle");
  }
  if (!(two_photon_ratio >= 0.0) || !std::isfinite(two_photon_ratio)) {
    throw Error(ErrorCode::kInvalidArgument, "two-photon ratio must be nonnegative");
  }
}

QuantumProtocol ApplyNoise(const QuantumProtocol& protocol, const NoiseModel& noise,
                           std::uint64_t seed) {
  protocol.Validate();
  noise.Validate();
  QuantumProtocol out = protocol;
  if (noise.depolarizing_strength > 0.0) {
    for (auto& rho : out.preparations) rho = Depolarize(rho, noise.depolarizing_strength);
  }
  if (noise.axis_jitter > 0.0) {
    for (int y = 1; y <= protocol.n; ++y) {
      Philox4x32 rng(seed, kJitterStream, static_cast<std::uint32_t>(y));
      const BlochVector axis = protocol.measurement(y).Axis();
      out.measurements[static_cast<std::size_t>(y - 1)] =
          BinaryMeasurement::AlongAxis(JitterAxis(axis, noise.axis_jitter, rng));
    }
  }
  return out;
}

double CalibrateDepolarizing(const QuantumProtocol& protocol, double target) {
  const double ideal = SuccessProbability(protocol).overall;
  if (!(target >= 0.5 && target <= ideal)) {
    throw Error(ErrorCode::kInvalidArgument,
                "target " + std::to_string(target) + " outside [0.5, " + std::to_string(ideal) + "]");
  }
  if (ideal == 0.5) return 0.0;
  return 1.0 - (target - 0.5) / (ideal - 0.5);
}

CountRecord SampleCounts(const QuantumProtocol& protocol, std::uint64_t counts_per_setting,
                         std::uint64_t seed) {
  protocol.Validate();
  if (counts_per_setting < 1) {
    throw Error(ErrorCode::kInvalidArgument, "counts per setting must be at least 1");
  }
  const int n = protocol.n;
  CountRecord record;
  record.n = n;
  record.settings.resize(StringCount(n) * static_cast<std::size_t>(n));
  ParallelFor(record.settings.size(), [&](std::size_t k) {
    const auto x = static_cast<std::uint32_t>(k / static_cast<std::size_t>(n));
    const int y = static_cast<int>(k % static_cast<std::size_t>(n)) + 1;
    Philox4x32 rng(seed, kCountStream | static_cast<std::uint32_t>(y), x);
    const double p0 = BornProbability(protocol.preparations[x], protocol.measurement(y), 0);
    const std::uint64_t n0 = DrawBinomial(rng, counts_per_setting, p0);
    record.settings[k] = {x, y, n0, counts_per_setting - n0};
  });
  return record;
}

EstimateWithError EstimateSuccess(const CountRecord& counts) {
  const int n = counts.n;
  if (n < 1 || n > kMaxBits) throw Error(ErrorCode::kIncompleteRecord, "record has no bit count");
  const std::size_t expected = StringCount(n) * static_cast<std::size_t>(n);
  std::vector<bool> seen(expected, false);
  double freq_sum = 0.0;
  double var_sum = 0.0;
  for (const SettingCounts& c : counts.settings) {
    if (c.x >= StringCount(n) || c.y < 1 || c.y > n) {
      throw Error(ErrorCode::kIncompleteRecord, "setting outside the record's range");
    }
    const std::size_t k = c.x * static_cast<std::size_t>(n) + static_cast<std::size_t>(c.y - 1);
    if (seen[k]) throw Error(ErrorCode::kIncompleteRecord, "duplicate setting");
    if (c.total() == 0) throw Error(ErrorCode::kIncompleteRecord, "setting with no counts");
    seen[k] = true;
    const double total = static_cast<double>(c.total());
    const double correct = static_cast<double>(((c.x >> (c.y - 1)) & 1u) ? c.n1 : c.n0);
    const double f = correct / total;
    freq_sum += f;
    var_sum += f * (1.0 - f) / total;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::kIncompleteRecord, "missing settings");
  }
  const double settings = static_cast<double>(expected);
  return {freq_sum / settings, std::sqrt(var_sum) / settings};
}

DensityOperator Tomography(const std::array<AxisCounts, 3>& axes) {
  double r[3];
  for (int i = 0; i < 3; ++i) {
    const double total = axes[static_cast<std::size_t>(i)].n0 + axes[static_cast<std::size_t>(i)].n1;
    if (!(total > 0.0)) throw Error(ErrorCode::kInsufficientData, "axis without counts");
    r[i] = (axes[static_cast<std::size_t>(i)].n0 - axes[static_cast<std::size_t>(i)].n1) / total;
  }
  BlochVector v{r[0], r[1], r[2]};
  const double norm = v.Norm();
  if (norm > 1.0) v = v * (1.0 / norm);
  return BlochToDensity(v);
}

std::vector<std::array<AxisCounts, 3>> TomographyRecord::ByPreparation() const {
  if (n < 1 || n > kMaxBits) throw Error(ErrorCode::kInsufficientData, "record has no bit count");
  std::vector<std::array<AxisCounts, 3>> out(StringCount(n));
  std::vector<std::array<bool, 3>> seen(StringCount(n), {false, false, false});
  for (const Entry& e : entries) {
    if (e.x >= StringCount(n) || e.axis < 0 || e.axis > 2) {
      throw Error(ErrorCode::kInsufficientData, "entry outside the record's range");
    }
    auto& slot = out[e.x][static_cast<std::size_t>(e.axis)];
    slot.n0 += static_cast<double>(e.n0);
    slot.n1 += static_cast<double>(e.n1);
    seen[e.x][static_cast<std::size_t>(e.axis)] = true;
  }
  for (std::uint32_t x = 0; x < seen.size(); ++x) {
    for (int a = 0; a < 3; ++a) {
      if (!seen[x][static_cast<std::size_t>(a)]) {
        throw Error(ErrorCode::kInsufficientData,
                    "no counts for preparation " + RenderBits(n, x) + " axis " + "xyz"[a]);
      }
    }
  }
  return out;
}

TomographyRecord SampleTomography(const QuantumProtocol& protocol, std::uint64_t counts_per_axis,
                                  std::uint64_t seed) {
  protocol.Validate();
  if (counts_per_axis < 1) throw Error(ErrorCode::kInvalidArgument, "counts per axis must be >= 1");
  const BinaryMeasurement paulis[3] = {BinaryMeasurement::AlongAxis({1, 0, 0}),
                                       BinaryMeasurement::AlongAxis({0, 1, 0}),
                                       BinaryMeasurement::AlongAxis({0, 0, 1})};
  TomographyRecord record;
  record.n = protocol.n;
  record.entries.resize(3 * StringCount(protocol.n));
  ParallelFor(record.entries.size(), [&](std::size_t k) {
    const auto x = static_cast<std::uint32_t>(k / 3);
    const int axis = static_cast<int>(k % 3);
    Philox4x32 rng(seed, kTomographyStream | static_cast<std::uint32_t>(axis), x);
    const double p0 = BornProbability(protocol.preparations[x], paulis[axis], 0);
    const std::uint64_t n0 = DrawBinomial(rng, counts_per_axis, p0);
    record.entries[k] = {x, axis, n0, counts_per_axis - n0};
  });
  return record;
}

EstimateWithError EstimateParityLeakageTomographic(const TomographyRecord& record,
                                                   const ParityMask& s,
                                                   const BootstrapOptions& options) {
  if (s.size() != record.n) {
    throw Error(ErrorCode::kInvalidMask, "mask length does not match the record");
  }
  if (options.replicates < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bootstrap needs at least two replicates");
  }
  const auto per_x = record.ByPreparation();
  EstimateWithError out;
  out.value = LeakageFromCounts(per_x, s.index());

  std::vector<double> replicate(static_cast<std::size_t>(options.replicates));
  ParallelFor(replicate.size(), [&](std::size_t r) {
    Philox4x32 rng(options.seed, kBootstrapStream, static_cast<std::uint32_t>(r));
    auto resampled = per_x;
    for (auto& axes : resampled) {
      for (auto& c : axes) {
        const double total = c.n0 + c.n1;
        const auto trials = static_cast<std::uint64_t>(std::llround(total));
        const double n0 = static_cast<double>(DrawBinomial(rng, trials, c.n0 / total));
        c = {n0, static_cast<double>(trials) - n0};
      }
    }
    replicate[r] = LeakageFromCounts(resampled, s.index());
  });
  double mean = 0.0;
  for (double v : replicate) mean += v;
  mean /= static_cast<double>(replicate.size());
  double ss = 0.0;
  for (double v : replicate) ss += (v - mean) * (v - mean);
  out.std_error = std::sqrt(ss / static_cast<double>(replicate.size() - 1));
  return out;
}

TwoPhotonLeakage TwoPhotonParityLeakage(const QuantumProtocol& protocol, const ParityMask& s,
                                        double p2) {
  if (!(p2 >= 0.0 && p2 <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "two-photon ratio must lie in [0, 1]");
  }
  TwoPhotonLeakage out;
  out.single_photon =
      0.5 + 0.25 * TraceDistance(ParityMixture(protocol, s, 0), ParityMixture(protocol, s, 1));

  ComplexMatrix diff(4);
  const double w = 1.0 / static_cast<double>(StringCount(protocol.n - 1));
  for (std::uint32_t x = 0; x < StringCount(protocol.n); ++x) {
    const ComplexMatrix rho = ComplexMatrix::FromQubit(protocol.preparations[x].matrix());
    ComplexMatrix pair = Kronecker(rho, rho);
    pair *= DotParity(x, s.index()) ? -w : w;
    diff += pair;
  }
  out.two_photon = 0.5 + 0.25 * TraceNorm(diff);
  out.weighted = (out.single_photon + p2 * out.two_photon) / (1.0 + p2);
  return out;
}

}  // namespace pomlab
