// Copyright 2026 The Authors.
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

#ifndef SUBMOD_CORE_PARALLEL_H_
#define SUBMOD_CORE_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace submod {

// Process-wide cap on worker threads used by the exhaustive checkers.
// 0 means std::thread::hardware_concurrency().
void SetMaxThreads(int threads);
int MaxThreads();

// Splits [0, count) into `chunks` contiguous ranges and calls
// fn(chunk, begin, end) for each, on up to MaxThreads() workers. Callers keep
// per-chunk results and merge them in chunk order, so the outcome does not
// depend on the thread count.
void ParallelChunks(int64_t count, int chunks,
                    const std::function<void(int, int64_t, int64_t)>& fn);

// Number of chunks to use for `count` items.
int DefaultChunks(int64_t count);

}  // namespace submod

#endif  // SUBMOD_CORE_PARALLEL_H_
