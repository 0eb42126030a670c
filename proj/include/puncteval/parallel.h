// Copyright 2026 The puncteval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUNCTEVAL_PARALLEL_H_
#define PUNCTEVAL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace puncteval {

// Worker count from the PUNCTEVAL_WORKERS environment variable, defaulting
// to the hardware concurrency (at least 1).
std::size_t WorkerCount();

// Runs fn(i) for i in [0, count) on a bounded worker pool. Results must be
// written into preallocated slots so output ordering never depends on
// completion order. The first exception thrown by any worker is rethrown.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace puncteval

#endif  // PUNCTEVAL_PARALLEL_H_
