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

#ifndef SUBMOD_CORE_FUNCTION_IO_H_
#define SUBMOD_CORE_FUNCTION_IO_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "submod/core/element_set.h"
#include "submod/core/set_function.h"

namespace submod {

// {"n": n, "values": [2^n reals]} in binary-counter order, element 0 being
// the least-significant bit.
absl::StatusOr<nlohmann::json> TabulatedToJson(const SetFunction& f,
                                               int limit = 24);
absl::StatusOr<SetFunction> TabulatedFromJson(const nlohmann::json& j);

absl::StatusOr<nlohmann::json> ReadJsonFile(const std::string& path);
absl::Status WriteJsonFile(const std::string& path, const nlohmann::json& j);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, const std::string& text);

// Sorted member list <-> ElementSet.
nlohmann::json SetToJson(const ElementSet& s);
absl::StatusOr<ElementSet> SetFromJson(int ground_size, const nlohmann::json& j);

// Shortest decimal form that round-trips through strtod.
std::string FormatDouble(double v);

}  // namespace submod

#endif  // SUBMOD_CORE_FUNCTION_IO_H_
