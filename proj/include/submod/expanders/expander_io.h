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

#ifndef SUBMOD_EXPANDERS_EXPANDER_IO_H_
#define SUBMOD_EXPANDERS_EXPANDER_IO_H_

#include "absl/status/statusor.h"
#include "json.hpp"
#include "submod/expanders/bipartite.h"

namespace submod {

// {"k":int, "n":int, "d":int, "neighbors":[[sorted ints]...]}.
nlohmann::json GraphToJson(const BipartiteNeighborhoods& g);

// Validates that every list holds exactly d distinct vertices in [n].
absl::StatusOr<BipartiteNeighborhoods> GraphFromJson(const nlohmann::json& j);

}  // namespace submod

#endif  // SUBMOD_EXPANDERS_EXPANDER_IO_H_
