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

#ifndef SUBMOD_EXPERIMENTS_LOWER_BOUND_H_
#define SUBMOD_EXPERIMENTS_LOWER_BOUND_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace submod {

enum class LowerBoundLearner { kGeneral, kProduct };

absl::StatusOr<LowerBoundLearner> ParseLowerBoundLearner(std::string_view name);

struct LowerBoundOptions {
  int k = 256;
  int n = 2048;
  int d = 8;
  int64_t b = 5;
  int tau = 2;
  int L = 2;
  double epsilon = 0.125;
  int train_size = 64;
  LowerBoundLearner learner = LowerBoundLearner::kGeneral;
  int max_attempts = 20;
};

struct LowerBoundRow {
  int index = 0;
  bool marked = false;
  bool seen = false;
  double truth = 0;
  double prediction = 0;
  bool miss = false;
};

// One world: a verified expander, a random B ⊆ [k] (each index with
// probability 1/2), target rank of M_B, distribution uniform on the A_i.
// The learner trains on train_size draws; its point prediction for A_i is
// h(A_i) scaled to the geometric middle of its guarantee interval. A miss
// is a prediction off by a factor of √(d/b) or more.
struct LowerBoundResult {
  uint64_t graph_seed = 0;
  int attempts = 0;
  double worst_expansion_ratio = 0;
  int marked = 0;
  int seen = 0;
  double train_coverage = 0;   // seen / k
  int heldout_misses = 0;
  double miss_fraction = 0;    // heldout_misses / k
  double standard_error = 0;   // of miss_fraction under fair coins
  double threshold = 0;        // (1 - train_coverage)/2 - 3 se
  double miss_factor = 0;      // √(d/b)
  bool passed = false;
  std::vector<LowerBoundRow> rows;
};

absl::StatusOr<LowerBoundResult> RunLowerBoundExperiment(
    const LowerBoundOptions& options, uint64_t seed);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_LOWER_BOUND_H_
