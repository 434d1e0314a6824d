// Copyright 2026 The Propeval Authors.
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

#ifndef PROPEVAL_PARALLEL_H_
#define PROPEVAL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace propeval {

// Worker count: PROPEVAL_THREADS when set to a positive integer, otherwise
// (unset, 0 or unparsable) the hardware concurrency.
std::size_t ThreadCount();

// Runs fn(i) for i in [0, n) on up to ThreadCount() threads. Callers write
// into pre-sized slots indexed by i so results never depend on scheduling.
// If several calls throw, the exception from the smallest index is
// rethrown after all workers finish.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)> &fn);

}  // namespace propeval

#endif  // PROPEVAL_PARALLEL_H_
