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

#include "submod/core/function_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"

namespace submod {

using nlohmann::json;

absl::StatusOr<json> TabulatedToJson(const SetFunction& f, int limit) {
  auto values = Tabulate(f, limit);
  if (!values.ok()) return values.status();
  return json{{"n", f.ground_size()}, {"values", *values}};
}

absl::StatusOr<SetFunction> TabulatedFromJson(const json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("tabulated function must be an object");
  }
  for (const auto& [key, unused] : j.items()) {
    if (key != "n" && key != "values") {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown key '", key, "' in tabulated function"));
    }
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    return absl::InvalidArgumentError("key 'n' missing or not an integer");
  }
  if (!j.contains("values") || !j["values"].is_array()) {
    return absl::InvalidArgumentError("key 'values' missing or not an array");
  }
  std::vector<double> values;
  values.reserve(j["values"].size());
  for (const auto& v : j["values"]) {
    if (!v.is_number()) {
      return absl::InvalidArgumentError("key 'values' has a non-numeric entry");
    }
    values.push_back(v.get<double>());
  }
  return MakeTabulatedFunction(j["n"].get<int>(), std::move(values));
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  }
  out << text;
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("short write to ", path));
}

absl::StatusOr<json> ReadJsonFile(const std::string& path) {
  auto text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  json j = json::parse(*text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": malformed JSON"));
  }
  return j;
}

absl::Status WriteJsonFile(const std::string& path, const json& j) {
  return WriteTextFile(path, j.dump(2) + "\n");
}

json SetToJson(const ElementSet& s) { return s.Members(); }

absl::StatusOr<ElementSet> SetFromJson(int ground_size, const json& j) {
  if (!j.is_array()) {
    return absl::InvalidArgumentError("set must be an array of integers");
  }
  std::vector<int> members;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      return absl::InvalidArgumentError("set member is not an integer");
    }
    members.push_back(e.get<int>());
  }
  return ElementSet::FromMembers(ground_size, members);
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace submod
