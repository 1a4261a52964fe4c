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

#ifndef SUBMOD_TOOLS_COMMANDS_H_
#define SUBMOD_TOOLS_COMMANDS_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace submod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitUsage = 2;

enum class ParamType { kInt, kReal, kString };

struct ParamSpec {
  std::string key;
  ParamType type = ParamType::kInt;
  nlohmann::json default_value;  // null: derived from other keys
  std::string help;
};

struct CommandSpec {
  std::string name;
  std::string summary;
  std::vector<std::string> modes;  // empty: no mode argument
  std::vector<ParamSpec> params;
};

const std::vector<CommandSpec>& Commands();
const CommandSpec* FindCommand(std::string_view name);

// Defaults, then the config object, then flags. Unknown keys and type
// mismatches are InvalidArgument errors naming the key.
absl::StatusOr<nlohmann::json> ResolveParams(
    const CommandSpec& spec, const nlohmann::json& config,
    const std::map<std::string, std::string>& flags);

std::string Describe(const CommandSpec& spec);

struct Invocation {
  std::string command;
  std::string mode;
  uint64_t seed = 1;
  std::string out_dir = ".";
  nlohmann::json params;
};

// Runs one command and returns the process exit code.
int Execute(const Invocation& inv, std::ostream& out, std::ostream& err);

}  // namespace submod::cli

#endif  // SUBMOD_TOOLS_COMMANDS_H_
