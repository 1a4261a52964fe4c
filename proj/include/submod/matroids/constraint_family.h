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

#ifndef SUBMOD_MATROIDS_CONSTRAINT_FAMILY_H_
#define SUBMOD_MATROIDS_CONSTRAINT_FAMILY_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"

namespace submod {

// Sets A_0..A_{k-1} over [n] with capacities b_0..b_{k-1}. Indices are
// 0-based throughout.
struct ConstraintFamily {
  int n = 0;
  std::vector<ElementSet> sets;
  std::vector<int64_t> caps;

  int k() const { return static_cast<int>(sets.size()); }
};

absl::StatusOr<ConstraintFamily> MakeConstraintFamily(
    int n, std::vector<ElementSet> sets, std::vector<int64_t> caps);

// Same capacity b for every set.
absl::StatusOr<ConstraintFamily> MakeUniformFamily(int n,
                                                   std::vector<ElementSet> sets,
                                                   int64_t b);

// A(J) = ∪_{j∈J} A_j.
ElementSet UnionOf(const ConstraintFamily& family, const std::vector<int>& J);

// g(J) = Σ_{j∈J} b_j - (Σ_{j∈J} |A_j| - |A(J)|), exact.
int64_t GValue(const ConstraintFamily& family, const std::vector<int>& J);

// Σ_{j=1}^{max_size} C(k, j), saturating at INT64_MAX.
int64_t CountSubfamilies(int k, int max_size);

// One visited sub-family J (ascending indices) with its union and g(J).
struct SubfamilyView {
  const std::vector<int>& J;
  const ElementSet& union_set;
  int64_t g;
};

// Visits every non-empty J ⊆ `indices` with |J| <= max_size in lexicographic
// order, computing unions incrementally along the subset lattice. The visitor
// returns false to stop early. Refuses when the count exceeds `budget`.
absl::Status EnumerateSubfamilies(
    const ConstraintFamily& family, const std::vector<int>& indices,
    int max_size, int64_t budget,
    const std::function<bool(const SubfamilyView&)>& visit);

struct LargenessResult {
  bool large = true;
  // First violating J (ascending indices) with its g value.
  std::vector<int> violating_set;
  int64_t violating_g = 0;
  int64_t sets_checked = 0;
};

inline constexpr int64_t kLargenessBudget = 10'000'000;

// (d, τ)-largeness: g(J) >= 0 for |J| < τ and g(J) >= d for
// τ <= |J| <= 2τ - 2. When `indices` is non-null only sub-families of those
// indices are examined.
absl::StatusOr<LargenessResult> IsDtauLarge(
    const ConstraintFamily& family, int64_t d, int tau,
    int64_t budget = kLargenessBudget, const std::vector<int>* indices = nullptr);

}  // namespace submod

#endif  // SUBMOD_MATROIDS_CONSTRAINT_FAMILY_H_
