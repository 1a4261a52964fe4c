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

#ifndef SUBMOD_MATROIDS_FAMILY_MB_H_
#define SUBMOD_MATROIDS_FAMILY_MB_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/expanders/bipartite.h"
#include "submod/matroids/matroid.h"

namespace submod {

// The matroid M_B over the sets A_i = Γ({u_i}) of a left-regular graph, with
// a common capacity b and marked indices B: |I| <= d and
// |I ∩ A(J)| <= g(J) for J ⊆ B, 1 <= |J| < τ.
struct FamilyMB {
  MatroidSpec spec;
  std::vector<int> marked;  // B, ascending
  int64_t b = 0;
  BipartiteNeighborhoods graph;

  int64_t d() const { return *spec.cap(); }
  int tau() const { return *spec.tau(); }
  bool IsMarked(int i) const;
};

// Requires every neighborhood to have exactly d vertices and g restricted to
// sub-families of B to be (d, τ)-large.
absl::StatusOr<FamilyMB> BuildFamilyMB(const BipartiteNeighborhoods& graph,
                                       int64_t b, int64_t d, int tau,
                                       std::vector<int> marked,
                                       int64_t budget = kLargenessBudget);

// Parameter formulas for the extremal family: d = n^{1/3}, b = 8 log k,
// τ = d / (4 log k), L = d / (2 log k), ε = 2 log k / d. Integers are rounded
// (d to nearest, b up, τ and L down, both at least 1).
struct FamilyDefaults {
  int64_t d = 0;
  int64_t b = 0;
  int tau = 1;
  int L = 1;
  double epsilon = 0;
};
FamilyDefaults ComputeFamilyDefaults(int n, int k, double log_base = 2.0);

}  // namespace submod

#endif  // SUBMOD_MATROIDS_FAMILY_MB_H_
