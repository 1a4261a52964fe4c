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

#include "submod/matroids/matroid_io.h"

#include <algorithm>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/function_io.h"

namespace submod {

using nlohmann::json;

namespace {

const std::set<std::string>& KnownKinds() {
  static const auto* kinds = new std::set<std::string>{
      "uncrossed", "truncated", "partition",      "pairwise",
      "family-mb", "tabulated", "constraint-list"};
  return *kinds;
}

absl::StatusOr<std::vector<ElementSet>> SetList(int n, const json& j,
                                                const char* key) {
  if (!j.is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("key '", key, "' must be an array of sets"));
  }
  std::vector<ElementSet> out;
  for (const auto& s : j) {
    auto set = SetFromJson(n, s);
    if (!set.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("key '", key, "': ", set.status().message()));
    }
    out.push_back(*std::move(set));
  }
  return out;
}

}  // namespace

json InstanceToJson(const MatroidInstance& inst) {
  json j;
  j["kind"] = inst.kind;
  j["n"] = inst.n;
  if (inst.kind == "tabulated") {
    json list = json::array();
    for (const auto& s : inst.independent) list.push_back(SetToJson(s));
    j["independent"] = list;
    return j;
  }
  j["k"] = inst.k();
  if (inst.d.has_value()) j["d"] = *inst.d;
  if (inst.uniform_b && !inst.caps.empty()) {
    j["b"] = inst.caps.front();
  } else {
    j["b"] = inst.caps;
  }
  if (inst.tau.has_value()) j["tau"] = *inst.tau;
  json sets = json::array();
  for (const auto& s : inst.sets) sets.push_back(SetToJson(s));
  j["A"] = sets;
  if (inst.kind == "family-mb") j["B"] = inst.marked;
  return j;
}

absl::StatusOr<MatroidInstance> InstanceFromJson(const json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("matroid instance must be an object");
  }
  static const std::set<std::string> kKeys = {"n", "k", "d", "b", "tau",
                                              "A", "B", "kind", "independent"};
  for (const auto& [key, unused] : j.items()) {
    if (!kKeys.count(key)) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown key '", key, "' in matroid instance"));
    }
  }
  MatroidInstance inst;
  if (!j.contains("kind") || !j["kind"].is_string()) {
    return absl::InvalidArgumentError("key 'kind' missing or not a string");
  }
  inst.kind = j["kind"].get<std::string>();
  if (!KnownKinds().count(inst.kind)) {
    return absl::InvalidArgumentError(
        absl::StrCat("key 'kind' has unknown value '", inst.kind, "'"));
  }
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 0) {
    return absl::InvalidArgumentError("key 'n' missing or not a count");
  }
  inst.n = j["n"].get<int>();
  if (inst.kind == "tabulated") {
    if (!j.contains("independent")) {
      return absl::InvalidArgumentError("key 'independent' missing");
    }
    auto list = SetList(inst.n, j["independent"], "independent");
    if (!list.ok()) return list.status();
    inst.independent = *std::move(list);
    return inst;
  }
  if (!j.contains("A")) return absl::InvalidArgumentError("key 'A' missing");
  auto sets = SetList(inst.n, j["A"], "A");
  if (!sets.ok()) return sets.status();
  inst.sets = *std::move(sets);
  if (j.contains("k")) {
    if (!j["k"].is_number_integer() || j["k"].get<int>() != inst.k()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "key 'k' disagrees with the ", inst.k(), " sets in 'A'"));
    }
  }
  if (!j.contains("b")) return absl::InvalidArgumentError("key 'b' missing");
  if (j["b"].is_number_integer()) {
    inst.uniform_b = true;
    inst.caps.assign(inst.k(), j["b"].get<int64_t>());
  } else if (j["b"].is_array()) {
    inst.uniform_b = false;
    for (const auto& b : j["b"]) {
      if (!b.is_number_integer()) {
        return absl::InvalidArgumentError("key 'b' has a non-integer entry");
      }
      inst.caps.push_back(b.get<int64_t>());
    }
    if (inst.k() != static_cast<int>(inst.caps.size())) {
      return absl::InvalidArgumentError(absl::StrCat(
          "key 'b' has ", inst.caps.size(), " entries, expected ", inst.k()));
    }
  } else {
    return absl::InvalidArgumentError("key 'b' must be an integer or array");
  }
  if (j.contains("d")) {
    if (!j["d"].is_number_integer()) {
      return absl::InvalidArgumentError("key 'd' is not an integer");
    }
    inst.d = j["d"].get<int64_t>();
  }
  if (j.contains("tau")) {
    if (!j["tau"].is_number_integer()) {
      return absl::InvalidArgumentError("key 'tau' is not an integer");
    }
    inst.tau = j["tau"].get<int>();
  }
  if (j.contains("B")) {
    if (!j["B"].is_array()) {
      return absl::InvalidArgumentError("key 'B' must be an array");
    }
    for (const auto& i : j["B"]) {
      if (!i.is_number_integer()) {
        return absl::InvalidArgumentError("key 'B' has a non-integer entry");
      }
      inst.marked.push_back(i.get<int>());
    }
  }
  return inst;
}

absl::StatusOr<MatroidSpec> BuildFromInstance(const MatroidInstance& inst) {
  if (inst.kind == "tabulated") {
    if (inst.n > 24) {
      return absl::InvalidArgumentError("tabulated instance needs n <= 24");
    }
    std::vector<char> table(size_t{1} << inst.n, 0);
    for (const auto& s : inst.independent) table[s.ToMask()] = 1;
    return BuildTabulated(inst.n, std::move(table));
  }
  auto family = MakeConstraintFamily(inst.n, inst.sets, inst.caps);
  if (!family.ok()) return family.status();
  auto need = [&](bool present, const char* key) {
    return present ? absl::OkStatus()
                   : absl::InvalidArgumentError(absl::StrCat(
                         "kind '", inst.kind, "' needs key '", key, "'"));
  };
  if (inst.kind == "uncrossed") return BuildUncrossed(*family);
  if (inst.kind == "partition") return BuildPartition(*family);
  if (inst.kind == "constraint-list") {
    return BuildConstraintList(*family, inst.d);
  }
  if (auto s = need(inst.d.has_value(), "d"); !s.ok()) return s;
  if (inst.kind == "pairwise") return BuildPairwise(*family, *inst.d);
  if (auto s = need(inst.tau.has_value(), "tau"); !s.ok()) return s;
  if (inst.kind == "truncated") {
    return BuildTruncated(*family, *inst.d, *inst.tau);
  }
  // family-mb: the sets are the graph's neighborhoods.
  if (!inst.uniform_b) {
    return absl::InvalidArgumentError("kind 'family-mb' needs a common 'b'");
  }
  BipartiteNeighborhoods graph{inst.k(), inst.n, static_cast<int>(*inst.d), {}};
  for (const auto& s : inst.sets) graph.neighbors.push_back(s.Members());
  for (const auto& list : graph.neighbors) {
    if (static_cast<int64_t>(list.size()) != *inst.d) {
      return absl::InvalidArgumentError(
          absl::StrCat("kind 'family-mb' needs every set in 'A' to have size ",
                       *inst.d));
    }
  }
  const int64_t b = inst.caps.empty() ? 0 : inst.caps.front();
  auto mb = BuildFamilyMB(graph, b, *inst.d, *inst.tau, inst.marked);
  if (!mb.ok()) return mb.status();
  return mb->spec;
}

MatroidInstance InstanceFromFamilyMB(const FamilyMB& mb) {
  MatroidInstance inst;
  inst.kind = "family-mb";
  inst.n = mb.graph.n;
  inst.d = mb.d();
  inst.tau = mb.tau();
  inst.uniform_b = true;
  inst.caps.assign(mb.graph.k, mb.b);
  inst.sets = mb.graph.Neighborhoods();
  inst.marked = mb.marked;
  return inst;
}

}  // namespace submod
