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

#include "submod/learners/sqrt_linear_bound.h"

#include <algorithm>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/learners/linear_feasibility.h"

namespace submod {

absl::StatusOr<SqrtLinearBound> VerifySqrtLinearBound(const SetFunction& f,
                                                      int limit) {
  const int n = f.ground_size();
  if (n > limit || n > 24) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "sqrt-linear bound check enumerates 2^n sets; n = ", n,
        " exceeds the limit ", limit));
  }
  if (n == 0) return SqrtLinearBound{true, {}, 1, 1, std::nullopt};
  if (f(ElementSet(n)) != 0) {
    return absl::FailedPreconditionError("sqrt-linear bound needs f(∅) = 0");
  }
  const uint64_t total = uint64_t{1} << n;
  CoveringLp lp;
  lp.num_vars = n;
  lp.cost.assign(n, 1.0);
  std::vector<double> sq(total, 0.0);
  for (uint64_t m = 1; m < total; ++m) {
    const double v = f(ElementSet::FromMask(n, m));
    sq[m] = v * v;
    std::vector<double> lower(n, 0.0), upper(n, 0.0);
    for (int j = 0; j < n; ++j) {
      if (m >> j & 1) {
        lower[j] = -1.0;
        upper[j] = n;
      }
    }
    lp.rows.push_back(std::move(lower));
    lp.rhs.push_back(-sq[m]);
    lp.rows.push_back(std::move(upper));
    lp.rhs.push_back(sq[m]);
  }
  auto solved = SolveCoveringLp(lp);
  if (!solved.ok()) return solved.status();
  SqrtLinearBound out;
  if (!solved->feasible) {
    std::vector<ElementSet> sets;
    for (int r : solved->conflict) {
      ElementSet s = ElementSet::FromMask(n, static_cast<uint64_t>(r / 2) + 1);
      if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
    }
    if (!sets.empty()) {
      out.conflict = {sets.front(), sets.size() > 1 ? sets[1] : sets.front()};
    }
    return out;
  }
  out.feasible = true;
  out.w = solved->x;
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0;
  for (uint64_t m = 1; m < total; ++m) {
    double lin = 0;
    for (int j = 0; j < n; ++j) {
      if (m >> j & 1) lin += out.w[j];
    }
    if (lin <= 0) continue;
    out.min_ratio = std::min(out.min_ratio, sq[m] / lin);
    out.max_ratio = std::max(out.max_ratio, sq[m] / lin);
  }
  return out;
}

}  // namespace submod
