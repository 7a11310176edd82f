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

#ifndef POMLAB_PARALLEL_H_
#define POMLAB_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace pomlab {

// Worker cap: POMLAB_THREADS when set to a positive integer, otherwise the
// hardware concurrency. Read on every call.
int WorkerCount();

// Runs body(i) for i in [0, count) on up to WorkerCount() threads.
// Callers must write results to per-index slots; the first exception thrown
// by any body is rethrown after all workers join.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pomlab

#endif  // POMLAB_PARALLEL_H_
