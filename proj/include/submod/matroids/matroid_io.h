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

#ifndef SUBMOD_MATROIDS_MATROID_IO_H_
#define SUBMOD_MATROIDS_MATROID_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "submod/core/element_set.h"
#include "submod/matroids/family_mb.h"
#include "submod/matroids/matroid.h"

namespace submod {

// Serialized matroid instance:
//   {"n":int, "k":int, "d":int, "b":int, "tau":int, "A":[[sorted ints]...],
//    "B":[ints], "kind":string}
// kind is one of uncrossed, truncated, partition, pairwise, family-mb,
// tabulated, constraint-list. "b" may also be an array of per-set
// capacities. Tabulated instances carry "independent": [[sorted ints]...]
// instead of A. Keys that a kind does not use may be omitted.
struct MatroidInstance {
  std::string kind;
  int n = 0;
  std::optional<int64_t> d;
  std::vector<int64_t> caps;
  bool uniform_b = true;
  std::optional<int> tau;
  std::vector<ElementSet> sets;
  std::vector<int> marked;
  std::vector<ElementSet> independent;

  int k() const { return static_cast<int>(sets.size()); }
  friend bool operator==(const MatroidInstance&,
                         const MatroidInstance&) = default;
};

nlohmann::json InstanceToJson(const MatroidInstance& inst);
absl::StatusOr<MatroidInstance> InstanceFromJson(const nlohmann::json& j);

// Runs the builder named by inst.kind (including its validity checks).
absl::StatusOr<MatroidSpec> BuildFromInstance(const MatroidInstance& inst);

MatroidInstance InstanceFromFamilyMB(const FamilyMB& mb);

}  // namespace submod

#endif  // SUBMOD_MATROIDS_MATROID_IO_H_
