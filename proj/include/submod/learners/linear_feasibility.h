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

#ifndef SUBMOD_LEARNERS_LINEAR_FEASIBILITY_H_
#define SUBMOD_LEARNERS_LINEAR_FEASIBILITY_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"

namespace submod {

// min c^T x  s.t.  g_i · x >= h_i for every row i,  x >= 0,  with c >= 0.
// Solved through its dual (max h^T y, G^T y <= c, y >= 0), whose origin is
// feasible, by a revised simplex that prices rows in batches. The primal is
// bounded below by 0, so the outcome is either an optimal x or a proof of
// infeasibility (a dual ray).
struct CoveringLp {
  int num_vars = 0;
  std::vector<double> cost;                // size num_vars, all >= 0
  std::vector<std::vector<double>> rows;   // each of size num_vars
  std::vector<double> rhs;
};

struct LpOptions {
  double tolerance = 1e-9;
  int64_t max_iterations = 200000;
  int batch = 0;  // rows added per pricing round; 0 picks 4 * num_vars
};

struct LpResult {
  bool feasible = false;
  std::vector<double> x;
  double objective = 0;
  // When infeasible: rows with positive weight in the dual ray, i.e. a
  // subset of constraints that cannot hold together.
  std::vector<int> conflict;
  int64_t iterations = 0;
};

// Errors: InvalidArgument on malformed input, Internal when the iteration
// limit is hit.
absl::StatusOr<LpResult> SolveCoveringLp(const CoveringLp& lp,
                                         const LpOptions& options = {});

// A point of R^{n+1}: (χ(A), t) stored as the set A and the last coordinate.
struct LabeledPoint {
  ElementSet set;
  double last = 0;
  int label = 1;  // +1 or -1
};

struct Separator {
  std::vector<double> w;  // size n, w >= 0, zero on zero_coords
  double z = 0;           // > 0
};

struct FeasibilityResult {
  bool feasible = false;
  Separator separator;
  std::vector<int> conflict;  // point indices when infeasible
};

// Finds u = (w, -z) with label · (u · x) >= margin · ||x|| for every point,
// w >= 0, z >= margin, and w_j = 0 for j in zero_coords.
absl::StatusOr<FeasibilityResult> SolveLinearFeasibility(
    int n, const std::vector<LabeledPoint>& points,
    const ElementSet& zero_coords, double margin = 1e-6);

}  // namespace submod

#endif  // SUBMOD_LEARNERS_LINEAR_FEASIBILITY_H_
