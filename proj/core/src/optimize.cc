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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "pomlab/error.h"
#include "pomlab/parallel.h"
#include "pomlab/protocol.h"
#include "pomlab/rng.h"

namespace pomlab {
namespace {

constexpr std::uint32_t kOptimizerStream = 0x0F71u;
constexpr double kInitialStep = 0.3;
constexpr double kPenaltyPhaseMinStep = 1e-8;
constexpr double kFeasiblePhaseMinStep = 1e-9;
constexpr double kRestoreTolerance = 1e-13;
constexpr int kRestoreMaxSteps = 30;

BlochVector FromAngles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Parameter layout: (theta_x, phi_x) for each x, then (theta_y, phi_y).
// All objective terms are evaluated in Bloch space, where for qubits
// Tr|rho_a - rho_b| = |r_a - r_b|.
class Landscape {
 public:
  explicit Landscape(int n) : n_(n), states_(StringCount(n)), masks_(AllParityMasks(n)) {}

  std::size_t dims() const { return 2 * states_ + 2 * static_cast<std::size_t>(n_); }
  std::size_t state_dims() const { return 2 * states_; }
  std::size_t constraint_count() const { return 3 * masks_.size(); }

  BlochVector State(const std::vector<double>& p, std::uint32_t x) const {
    return FromAngles(p[2 * x], p[2 * x + 1]);
  }
  BlochVector Axis(const std::vector<double>& p, int y) const {
    const std::size_t base = state_dims() + 2 * static_cast<std::size_t>(y - 1);
    return FromAngles(p[base], p[base + 1]);
  }

  double Success(const std::vector<double>& p) const {
    double sum = 0.0;
    for (int y = 1; y <= n_; ++y) {
      const BlochVector a = Axis(p, y);
      for (std::uint32_t x = 0; x < states_; ++x) {
        const double sign = ((x >> (y - 1)) & 1u) ? -1.0 : 1.0;
        sum += 0.5 * (1.0 + sign * State(p, x).Dot(a));
      }
    }
    return sum / (static_cast<double>(states_) * n_);
  }

  // Bloch difference between the s-parity 0 and 1 mixtures, per mask.
  std::vector<BlochVector> Constraints(const std::vector<double>& p) const {
    std::vector<BlochVector> out(masks_.size());
    const double norm = 1.0 / static_cast<double>(states_ / 2);
    for (std::uint32_t x = 0; x < states_; ++x) {
      const BlochVector r = State(p, x);
      for (std::size_t k = 0; k < masks_.size(); ++k) {
        const double sign = DotParity(x, masks_[k].index()) ? -norm : norm;
        out[k] = out[k] + r * sign;
      }
    }
    return out;
  }

  double Penalized(const std::vector<double>& p, double mu) const {
    double leak = 0.0;
    for (const BlochVector& c : Constraints(p)) leak += c.Norm();
    return Success(p) - mu * leak;
  }

  // Pull the state angles onto the oblivious set with min-norm Gauss-Newton
  // steps. Returns false if the residual does not reach kRestoreTolerance.
  bool Restore(std::vector<double>& p) const {
    if (masks_.empty()) return true;
    const auto rows = static_cast<Eigen::Index>(constraint_count());
    const auto cols = static_cast<Eigen::Index>(state_dims());
    const double norm = 1.0 / static_cast<double>(states_ / 2);
    for (int step = 0; step <= kRestoreMaxSteps; ++step) {
      const auto c = Constraints(p);
      Eigen::VectorXd residual(rows);
      double worst = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        residual(static_cast<Eigen::Index>(3 * k)) = c[k].x;
        residual(static_cast<Eigen::Index>(3 * k + 1)) = c[k].y;
        residual(static_cast<Eigen::Index>(3 * k + 2)) = c[k].z;
        worst = std::max({worst, std::abs(c[k].x), std::abs(c[k].y), std::abs(c[k].z)});
      }
      if (worst <= kRestoreTolerance) return true;
      if (step == kRestoreMaxSteps) break;
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(rows, cols);
      for (std::uint32_t x = 0; x < states_; ++x) {
        const double t = p[2 * x];
        const double f = p[2 * x + 1];
        const double dt[3] = {std::cos(t) * std::cos(f), std::cos(t) * std::sin(f), -std::sin(t)};
        const double df[3] = {-std::sin(t) * std::sin(f), std::sin(t) * std::cos(f), 0.0};
        for (std::size_t k = 0; k < masks_.size(); ++k) {
          const double sign = DotParity(x, masks_[k].index()) ? -norm : norm;
          for (int d = 0; d < 3; ++d) {
            jac(static_cast<Eigen::Index>(3 * k + d), 2 * x) = sign * dt[d];
            jac(static_cast<Eigen::Index>(3 * k + d), 2 * x + 1) = sign * df[d];
          }
        }
      }
      const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(residual);
      for (Eigen::Index i = 0; i < cols; ++i) p[static_cast<std::size_t>(i)] -= delta(i);
    }
    return false;
  }

  QuantumProtocol ToProtocol(const std::vector<double>& p) const {
    QuantumProtocol out;
    out.n = n_;
    for (std::uint32_t x = 0; x < states_; ++x) {
      BlochVector r = State(p, x);
      r = r * (1.0 / std::max(1.0, r.Norm()));
      out.preparations.push_back(BlochToDensity(r));
    }
    for (int y = 1; y <= n_; ++y) {
      BlochVector a = Axis(p, y);
      a = a * (1.0 / std::max(1.0, a.Norm()));
      out.measurements.push_back(BinaryMeasurement::AlongAxis(a));
    }
    return out;
  }

 private:
  int n_;
  std::uint32_t states_;
  std::vector<ParityMask> masks_;
};

std::vector<double> RandomStart(const Landscape& land, std::uint64_t seed, int restart) {
  Philox4x32 rng(seed, kOptimizerStream, static_cast<std::uint32_t>(restart));
  std::vector<double> p(land.dims());
  for (std::size_t i = 0; i < p.size(); i += 2) {
    p[i] = std::acos(2.0 * rng.NextUniform() - 1.0);
    p[i + 1] = 2.0 * std::numbers::pi * rng.NextUniform();
  }
  return p;
}

void PenaltyDescent(const Landscape& land, std::vector<double>& p, double mu, int sweeps) {
  double best = land.Penalized(p, mu);
  double h = kInitialStep;
  for (int sweep = 0; sweep < sweeps && h >= kPenaltyPhaseMinStep; ++sweep) {
    bool improved = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (double dir : {1.0, -1.0}) {
        const double saved = p[j];
        p[j] = saved + dir * h;
        const double value = land.Penalized(p, mu);
        if (value > best) {
          best = value;
          improved = true;
          break;
        }
        p[j] = saved;
      }
    }
    if (!improved) h *= 0.5;
  }
}

void FeasibleSearch(const Landscape& land, std::vector<double>& p, int sweeps) {
  std::vector<double> restored = p;
  if (!land.Restore(restored)) return;
  p = restored;
  double best = land.Success(p);
  double h = kInitialStep;
  for (int sweep = 0; sweep < sweeps && h >= kFeasiblePhaseMinStep; ++sweep) {
    bool improved = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> trial = p;
        trial[j] += dir * h;
        if (!land.Restore(trial)) continue;
        const double value = land.Success(trial);
        if (value > best) {
          best = value;
          p = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) h *= 0.5;
  }
}

OptimizerResult Evaluate(const Landscape& land, const std::vector<double>& p, double mu,
                         int restart) {
  OptimizerResult r;
  r.protocol = land.ToProtocol(p);
  r.success = SuccessProbability(r.protocol);
  r.leakage = ParityLeakage(r.protocol);
  double td_sum = 0.0;
  for (const auto& e : r.leakage.per_parity) td_sum += 4.0 * (e.probability - 0.5);
  r.objective = r.success.overall - mu * td_sum;
  r.best_restart = restart;
  return r;
}

bool Feasible(const OptimizerResult& r) {
  return r.leakage.max_leakage <= 0.5 + kOptimizerLeakageSlack;
}

}  // namespace

OptimizerResult OptimizeProtocol(int n, const OptimizerOptions& options) {
  if (n != 2 && n != 3) {
    throw Error(ErrorCode::kUnsupportedN,
                "optimizer supports n = 2 and n = 3, got " + std::to_string(n));
  }
  if (options.restarts < 1 || options.iterations < 0) {
    throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1 and iterations >= 0");
  }
  const Landscape land(n);
  if (options.iterations == 0) {
    return Evaluate(land, RandomStart(land, options.seed, 0), options.penalty, 0);
  }

  std::vector<OptimizerResult> results(static_cast<std::size_t>(options.restarts));
  ParallelFor(results.size(), [&](std::size_t i) {
    const int restart = static_cast<int>(i);
    std::vector<double> p = RandomStart(land, options.seed, restart);
    PenaltyDescent(land, p, options.penalty, options.iterations);
    FeasibleSearch(land, p, options.iterations);
    results[i] = Evaluate(land, p, options.penalty, restart);
  });

  // Fixed-order reduction; earlier restarts win ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    const bool fi = Feasible(results[i]);
    const bool fb = Feasible(results[best]);
    if ((fi && !fb) || (fi == fb && results[i].objective > results[best].objective)) best = i;
  }
  return results[best];
}

}  // namespace pomlab
