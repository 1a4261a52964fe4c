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

#include "submod/expanders/expander_io.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace submod {

using nlohmann::json;

json GraphToJson(const BipartiteNeighborhoods& g) {
  return json{{"k", g.k}, {"n", g.n}, {"d", g.d}, {"neighbors", g.neighbors}};
}

absl::StatusOr<BipartiteNeighborhoods> GraphFromJson(const json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("graph must be an object");
  for (const auto& [key, unused] : j.items()) {
    if (key != "k" && key != "n" && key != "d" && key != "neighbors") {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown key '", key, "' in graph"));
    }
  }
  for (const char* key : {"k", "n", "d"}) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      return absl::InvalidArgumentError(
          absl::StrCat("key '", key, "' missing or not an integer"));
    }
  }
  if (!j.contains("neighbors") || !j["neighbors"].is_array()) {
    return absl::InvalidArgumentError("key 'neighbors' missing or not an array");
  }
  BipartiteNeighborhoods g;
  g.k = j["k"].get<int>();
  g.n = j["n"].get<int>();
  g.d = j["d"].get<int>();
  if (static_cast<int>(j["neighbors"].size()) != g.k) {
    return absl::InvalidArgumentError(absl::StrCat(
        "key 'neighbors' has ", j["neighbors"].size(), " lists, expected ", g.k));
  }
  for (const auto& list : j["neighbors"]) {
    std::vector<int> nbrs;
    for (const auto& v : list) {
      if (!v.is_number_integer()) {
        return absl::InvalidArgumentError("neighbor is not an integer");
      }
      const int x = v.get<int>();
      if (x < 0 || x >= g.n) {
        return absl::InvalidArgumentError(
            absl::StrCat("neighbor ", x, " outside [", g.n, "]"));
      }
      nbrs.push_back(x);
    }
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end() ||
        static_cast<int>(nbrs.size()) != g.d) {
      return absl::InvalidArgumentError(absl::StrCat(
          "neighbor list ", g.neighbors.size(), " must hold ", g.d,
          " distinct vertices"));
    }
    g.neighbors.push_back(std::move(nbrs));
  }
  return g;
}

}  // namespace submod
