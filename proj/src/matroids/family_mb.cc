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

#include "submod/matroids/family_mb.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace submod {

bool FamilyMB::IsMarked(int i) const {
  return std::binary_search(marked.begin(), marked.end(), i);
}

absl::StatusOr<FamilyMB> BuildFamilyMB(const BipartiteNeighborhoods& graph,
                                       int64_t b, int64_t d, int tau,
                                       std::vector<int> marked,
                                       int64_t budget) {
  if (graph.d != d) {
    return absl::InvalidArgumentError(absl::StrCat(
        "neighborhoods have size ", graph.d, " but d = ", d));
  }
  if (b < 0) return absl::InvalidArgumentError("b must be >= 0");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  for (int i : marked) {
    if (i < 0 || i >= graph.k) {
      return absl::InvalidArgumentError(
          absl::StrCat("marked index ", i, " outside [", graph.k, "]"));
    }
  }
  auto family = MakeUniformFamily(graph.n, graph.Neighborhoods(), b);
  if (!family.ok()) return family.status();
  auto large = IsDtauLarge(*family, d, tau, budget, &marked);
  if (!large.ok()) return large.status();
  if (!large->large) {
    return absl::FailedPreconditionError(absl::StrCat(
        "marked sub-family is not (", d, ",", tau, ")-large: g(J) = ",
        large->violating_g, " for J = {",
        absl::StrJoin(large->violating_set, ","), "}"));
  }
  std::vector<Constraint> constraints;
  std::unordered_map<ElementSet, size_t, ElementSetHash> seen;
  auto status = EnumerateSubfamilies(
      *family, marked, tau - 1, budget, [&](const SubfamilyView& v) {
        auto [it, inserted] = seen.emplace(v.union_set, constraints.size());
        if (inserted) {
          constraints.push_back(Constraint{v.union_set, v.g});
        } else {
          constraints[it->second].rhs =
              std::min(constraints[it->second].rhs, v.g);
        }
        return true;
      });
  if (!status.ok()) return status;
  MatroidSpec spec = MatroidSpec::FromConstraints(
      MatroidKind::kFamilyMB, *std::move(family), std::move(constraints), d,
      tau, marked);
  return FamilyMB{std::move(spec), std::move(marked), b, graph};
}

FamilyDefaults ComputeFamilyDefaults(int n, int k, double log_base) {
  const double lk = std::log(static_cast<double>(k)) / std::log(log_base);
  FamilyDefaults f;
  f.d = std::max<int64_t>(1, std::llround(std::cbrt(static_cast<double>(n))));
  f.b = static_cast<int64_t>(std::ceil(8 * lk - 1e-9));
  f.tau = std::max(1, static_cast<int>(std::floor(f.d / (4 * lk) + 1e-9)));
  f.L = std::max(1, static_cast<int>(std::floor(f.d / (2 * lk) + 1e-9)));
  f.epsilon = 2 * lk / static_cast<double>(f.d);
  return f;
}

}  // namespace submod
