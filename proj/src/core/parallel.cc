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

#include "submod/core/parallel.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace submod {
namespace {

std::atomic<int> max_threads{0};

}  // namespace

void SetMaxThreads(int threads) { max_threads.store(std::max(0, threads)); }

int MaxThreads() {
  const int configured = max_threads.load();
  if (configured > 0) return configured;
  return std::max(1u, std::thread::hardware_concurrency());
}

int DefaultChunks(int64_t count) {
  if (count <= 0) return 1;
  return static_cast<int>(std::min<int64_t>(count, 64));
}

void ParallelChunks(int64_t count, int chunks,
                    const std::function<void(int, int64_t, int64_t)>& fn) {
  chunks = std::max(1, chunks);
  auto range = [&](int c) {
    const int64_t begin = count * c / chunks;
    const int64_t end = count * (c + 1) / chunks;
    fn(c, begin, end);
  };
  const int workers = std::min(MaxThreads(), chunks);
  if (workers <= 1) {
    for (int c = 0; c < chunks; ++c) range(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
        range(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace submod
