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

#ifndef SUBMOD_LEARNERS_SQRT_LINEAR_BOUND_H_
#define SUBMOD_LEARNERS_SQRT_LINEAR_BOUND_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/set_function.h"

namespace submod {

struct SqrtLinearBound {
  bool feasible = false;
  std::vector<double> w;
  // Smallest and largest f(S)² / w^T χ(S) over non-empty S (1 and n when
  // the bound is tight on both sides).
  double min_ratio = 0;
  double max_ratio = 0;
  // When infeasible: two sets whose constraints conflict.
  std::optional<std::pair<ElementSet, ElementSet>> conflict;
};

// Looks for w >= 0 with w^T χ(S) <= f(S)² <= n · w^T χ(S) for every
// non-empty S, over all 2^n sets. Requires f(∅) = 0 and n <= limit.
absl::StatusOr<SqrtLinearBound> VerifySqrtLinearBound(const SetFunction& f,
                                                      int limit = 14);

}  // namespace submod

#endif  // SUBMOD_LEARNERS_SQRT_LINEAR_BOUND_H_
