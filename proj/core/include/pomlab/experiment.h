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

#ifndef POMLAB_EXPERIMENT_H_
#define POMLAB_EXPERIMENT_H_

#include <array>
#include <cstdint>
#include <vector>

#include "pomlab/bits.h"
#include "pomlab/protocol.h"
#include "pomlab/qubit.h"

namespace pomlab {

struct NoiseModel {
  double depolarizing_strength = 0.0;  // rho -> (1 - eps) rho + eps I / 2
  double axis_jitter = 0.0;            // radians, std. dev. of the tilt angle
  double two_photon_ratio = 0.0;       // p2 relative to single-photon events

  // Throws invalid-argument on negative parameters or eps > 1.
  void Validate() const;
};

// Depolarizes every preparation and tilts every measurement axis by a
// seeded Gaussian angle (two tangent-plane components, each with standard
// deviation axis_jitter). Each axis draws from its own (seed, y) stream.
QuantumProtocol ApplyNoise(const QuantumProtocol& protocol, const NoiseModel& noise,
                           std::uint64_t seed);

// Depolarizing strength moving the success probability of `protocol` to
// `target`, from success(eps) = 1/2 + (1 - eps) (success(0) - 1/2).
// Throws invalid-argument unless 1/2 <= target <= success(0).
double CalibrateDepolarizing(const QuantumProtocol& protocol, double target);

struct SettingCounts {
  std::uint32_t x = 0;
  int y = 1;
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;

  std::uint64_t total() const { return n0 + n1; }
};

// Outcome counts per (x, y) setting, ordered x-major.
struct CountRecord {
  int n = 0;
  std::vector<SettingCounts> settings;
};

// Binomial outcome-0 counts per setting from the Born probability. Setting
// (x, y) draws from its own Philox stream keyed by (seed, y, x), so the record does not
// depend on how settings are spread across threads.
// Throws invalid-argument when counts_per_setting < 1.
CountRecord SampleCounts(const QuantumProtocol& protocol, std::uint64_t counts_per_setting,
                         std::uint64_t seed);

struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
};

// Average correct-outcome frequency over all 2^n n settings with the
// binomial standard error of a mean of independent settings.
// Throws incomplete-record when a setting is missing, repeated or empty.
EstimateWithError EstimateSuccess(const CountRecord& counts);

// Real-valued so that expected (exact) counts can be inverted too.
struct AxisCounts {
  double n0 = 0.0;
  double n1 = 0.0;
};

// Linear-inversion tomography from sigma_x, sigma_y, sigma_z counts.
// Bloch vectors longer than 1 are scaled back onto the sphere.
// Throws insufficient-data when an axis has no counts.
DensityOperator Tomography(const std::array<AxisCounts, 3>& axes);

// Counts from projective measurements along x, y, z on each preparation.
struct TomographyRecord {
  struct Entry {
    std::uint32_t x = 0;
    int axis = 0;  // 0 = x, 1 = y, 2 = z
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
  };
  int n = 0;
  std::vector<Entry> entries;

  // Per-preparation axis counts; throws insufficient-data when any
  // (x, axis) pair is missing.
  std::vector<std::array<AxisCounts, 3>> ByPreparation() const;
};

// Streams are keyed (seed, tomography tag + axis, x).
TomographyRecord SampleTomography(const QuantumProtocol& protocol, std::uint64_t counts_per_axis,
                                  std::uint64_t seed);

struct BootstrapOptions {
  int replicates = 200;
  std::uint64_t seed = 1;
};

// 1/2 + Tr|rho_0 - rho_1| / 4 from reconstructed parity mixtures, with a
// parametric bootstrap standard error (each (x, axis) count redrawn as
// Binomial(N, n0 / N)).
EstimateWithError EstimateParityLeakageTomographic(const TomographyRecord& record,
                                                   const ParityMask& s,
                                                   const BootstrapOptions& options = {});

struct TwoPhotonLeakage {
  double single_photon = 0.5;  // D1
  double two_photon = 0.5;     // D2, from rho_x (x) rho_x mixtures
  double weighted = 0.5;       // (D1 + p2 D2) / (1 + p2)
};

// Throws invalid-argument unless 0 <= p2 <= 1.
TwoPhotonLeakage TwoPhotonParityLeakage(const QuantumProtocol& protocol, const ParityMask& s,
                                        double p2);

}  // namespace pomlab

#endif  // POMLAB_EXPERIMENT_H_
