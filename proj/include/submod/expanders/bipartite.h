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

#ifndef SUBMOD_EXPANDERS_BIPARTITE_H_
#define SUBMOD_EXPANDERS_BIPARTITE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"

namespace submod {

// Left-regular bipartite graph U -> V with |U| = k, |V| = n. neighbors[u] is
// the sorted list of the d distinct right vertices adjacent to u.
struct BipartiteNeighborhoods {
  int k = 0;
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> neighbors;

  // Γ({u}) as a subset of [n].
  ElementSet Neighborhood(int u) const;
  // Γ(J) = ∪_{u∈J} Γ({u}).
  ElementSet Gamma(const std::vector<int>& left) const;
  // All Γ({u}), in order.
  std::vector<ElementSet> Neighborhoods() const;

  friend bool operator==(const BipartiteNeighborhoods&,
                         const BipartiteNeighborhoods&) = default;
};

// Each left vertex draws d endpoints i.i.d. uniform from [n] on its own
// stream; repeated endpoints are redrawn until all d are distinct.
absl::StatusOr<BipartiteNeighborhoods> SampleExpander(int k, int n, int d,
                                                      uint64_t seed);

// V is split into d blocks of n/d consecutive vertices; each left vertex picks
// one uniform neighbor per block. When `fixed_last` is given, the last left
// vertex gets exactly that neighborhood.
absl::StatusOr<BipartiteNeighborhoods> SamplePartitionedExpander(
    int k, int n, int d, uint64_t seed,
    const std::optional<ElementSet>& fixed_last = std::nullopt);

struct ExpansionParams {
  int L = 1;
  double epsilon = 0.25;
};

struct ExpansionResult {
  bool passes = true;
  // Left set minimizing |Γ(J)| / (d|J|) over 1 <= |J| <= L; first in
  // lexicographic order among ties.
  std::vector<int> worst_set;
  int worst_gamma = 0;
  double worst_ratio = 1;
  int64_t sets_checked = 0;
};

// Number of left sets with 1 <= |J| <= L, saturating at INT64_MAX.
int64_t CountLeftSets(int k, int L);

// Checks |Γ(J)| >= (1-ε) d |J| for every J ⊆ U with 1 <= |J| <= L.
absl::StatusOr<ExpansionResult> VerifyExpansion(
    const BipartiteNeighborhoods& graph, const ExpansionParams& params,
    int64_t budget = 200'000'000);

struct SuccessRate {
  int64_t successes = 0;
  int64_t trials = 0;
  double frequency = 0;
  double wilson_low = 0;
  double wilson_high = 0;
};

// Wilson score interval at 95% (z = 1.959964).
SuccessRate MakeSuccessRate(int64_t successes, int64_t trials);

// Generates `trials` graphs with seeds DeriveSeed(seed, i) and counts those
// passing VerifyExpansion.
absl::StatusOr<SuccessRate> MeasureSuccessRate(
    const std::function<absl::StatusOr<BipartiteNeighborhoods>(uint64_t)>&
        generate,
    const ExpansionParams& params, int64_t trials, uint64_t seed);

// Sampling-theorem hypotheses: k >= 4, d >= ln(k)/ε, n >= 16 L d / ε.
bool MeetsSamplingHypotheses(int k, int n, int d, const ExpansionParams& p);
// Partitioned variant: additionally L >= d and n >= 22 L d / ε.
bool MeetsPartitionedHypotheses(int k, int n, int d, const ExpansionParams& p);

// L = d / (2 log_base k) and ε = 2 log_base k / d.
ExpansionParams DefaultExpansionParams(int k, int d, double log_base = 2.0);

}  // namespace submod

#endif  // SUBMOD_EXPANDERS_BIPARTITE_H_
