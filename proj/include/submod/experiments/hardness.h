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

#ifndef SUBMOD_EXPERIMENTS_HARDNESS_H_
#define SUBMOD_EXPERIMENTS_HARDNESS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"
#include "submod/matroids/family_mb.h"
#include "submod/matroids/matroid.h"

namespace submod {

// Enumeration budget shared by the demos.
inline constexpr int64_t kHardnessBudget = int64_t{1} << 24;

struct MinimizationResult {
  int64_t brute_min = 0;
  int64_t predicted = 0;
  bool exhaustive = true;
  int64_t sets_checked = 0;
  std::vector<ElementSet> argmin;  // up to 8 minimizers
  bool matches() const { return brute_min == predicted; }
};

// min { rank(S) : |S| >= d } for a family-mb instance, with prediction b if
// B is non-empty and d otherwise. Exhaustive over all sets of size >= d when
// 2^n fits the budget, over d-subsets when C(n, d) fits (rank is monotone,
// so the minimum is attained at size d), and sampled otherwise.
absl::StatusOr<MinimizationResult> ConstrainedMinDemo(const FamilyMB& instance,
                                                      uint64_t seed = 0,
                                                      int64_t budget = kHardnessBudget);

// d internally disjoint s-t paths with n/d edges each; edges are numbered
// path by path, so path i holds edges [i m, (i+1) m), m = n/d.
struct StCutInstance {
  int d = 0;
  int n = 0;
  FamilyMB family;
  MinimizationResult result;  // minimum of rank over minimal s-t cuts
};

// The A_l come from a partitioned expander (one edge per path), so each is a
// minimal cut. Minimal cuts are exactly the transversals (one edge per path).
absl::StatusOr<StCutInstance> MakeStCutInstance(int d, int n, int k, int64_t b,
                                                int tau,
                                                const std::vector<int>& marked,
                                                uint64_t seed,
                                                int64_t budget = kHardnessBudget);

// Perfect matching on n vertices (edge i joins 2i and 2i+1). Minimal vertex
// covers pick one endpoint per edge. k random covers with pairwise overlap
// at most (1+ε)n/4, capacities ceil((3+ε)n/8), d = n/2, pairwise builder.
struct VertexCoverInstance {
  int n = 0;
  double epsilon = 0;
  int64_t b = 0;
  int64_t d = 0;
  std::vector<ElementSet> covers;
  MatroidSpec spec;
  MinimizationResult result;  // minimum of rank over minimal covers
  double ratio() const { return static_cast<double>(d) / b; }
};

absl::StatusOr<VertexCoverInstance> MakeVertexCoverInstance(
    int n, double epsilon, int k, uint64_t seed, int max_retries = 1000,
    int64_t budget = kHardnessBudget);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_HARDNESS_H_
