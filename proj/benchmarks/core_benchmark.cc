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


#include <benchmark/benchmark.h>

#include "pomlab/classical.h"
#include "pomlab/experiment.h"
#include "pomlab/protocol.h"

namespace pomlab {
namespace {

void BM_SuccessProbability(benchmark::State& state) {
  const QuantumProtocol p = StandardProtocol(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SuccessProbability(p).overall);
}
BENCHMARK(BM_SuccessProbability)->Arg(2)->Arg(3);

void BM_ParityLeakage(benchmark::State& state) {
  const QuantumProtocol p = StandardProtocol(3);
  for (auto _ : state) benchmark::DoNotOptimize(ParityLeakage(p).max_leakage);
}
BENCHMARK(BM_ParityLeakage);

void BM_TwoPhotonLeakage(benchmark::State& state) {
  const QuantumProtocol p = StandardProtocol(3);
  const ParityMask s(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(TwoPhotonParityLeakage(p, s, 0.007).weighted);
}
BENCHMARK(BM_TwoPhotonLeakage);

void BM_FourierTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassicalEncoding e = ClassicalEncoding::SingleBit(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(FourierTransform(e).coefficient(0, 1));
}
BENCHMARK(BM_FourierTransform)->Arg(4)->Arg(10)->Arg(16);

void BM_BruteForceOracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceOptimum(3, m).value);
}
BENCHMARK(BM_BruteForceOracle)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SampleAndEstimate(benchmark::State& state) {
  const QuantumProtocol p = StandardProtocol(3);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(EstimateSuccess(SampleCounts(p, 24'000'000, ++seed)).value);
}
BENCHMARK(BM_SampleAndEstimate);

void BM_TomographicLeakage(benchmark::State& state) {
  const TomographyRecord rec = SampleTomography(StandardProtocol(3), 1'000'000, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EstimateParityLeakageTomographic(rec, ParityMask(3, 7), {200, 1}).std_error);
  }
}
BENCHMARK(BM_TomographicLeakage)->Unit(benchmark::kMillisecond);

void BM_Optimizer(benchmark::State& state) {
  OptimizerOptions opt;
  opt.restarts = 4;
  for (auto _ : state) benchmark::DoNotOptimize(OptimizeProtocol(static_cast<int>(state.range(0)), opt).objective);
}
BENCHMARK(BM_Optimizer)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pomlab

BENCHMARK_MAIN();
