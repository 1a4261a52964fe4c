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

#include <algorithm>
#include <charconv>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"
#include "submod/core/function_io.h"
#include "submod/core/parallel.h"

namespace {

using submod::cli::kExitUsage;
using nlohmann::json;

struct SubcommandState {
  const submod::cli::CommandSpec* spec = nullptr;
  CLI::App* app = nullptr;
  std::string mode;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

bool ParseU64(const std::string& text, uint64_t& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"submodular function learning and matroid construction toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, seed_text, out_dir, threads_text;
  app.add_option("--config", config_path, "JSON file with parameter values");
  app.add_option("--seed", seed_text, "64-bit seed (default 1)");
  app.add_option("--out", out_dir, "output directory (default .)");
  app.add_option("--threads", threads_text, "worker thread cap");

  std::vector<std::unique_ptr<SubcommandState>> states;
  for (const auto& spec : submod::cli::Commands()) {
    auto st = std::make_unique<SubcommandState>();
    st->spec = &spec;
    st->app = app.add_subcommand(spec.name, spec.summary);
    if (!spec.modes.empty()) {
      st->app->add_option("mode", st->mode, "one of: " + [&] {
        std::string s;
        for (const auto& m : spec.modes) s += (s.empty() ? "" : ", ") + m;
        return s;
      }());
    }
    for (const auto& p : spec.params) {
      std::string names = "--" + p.key;
      std::string dashed = p.key;
      std::replace(dashed.begin(), dashed.end(), '_', '-');
      if (dashed != p.key) names += ",--" + dashed;
      st->options[p.key] = st->app->add_option(names, st->values[p.key], p.help);
    }
    states.push_back(std::move(st));
  }
  std::string describe_target;
  CLI::App* describe = app.add_subcommand("describe", "print a command's parameter schema");
  describe->add_option("command", describe_target, "command name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (describe->parsed()) {
    const auto* spec = submod::cli::FindCommand(describe_target);
    if (spec == nullptr) {
      std::cerr << "unknown command '" << describe_target << "'\n";
      return kExitUsage;
    }
    std::cout << submod::cli::Describe(*spec);
    return 0;
  }

  SubcommandState* chosen = nullptr;
  for (auto& st : states) {
    if (st->app->parsed()) chosen = st.get();
  }
  if (chosen == nullptr) return kExitUsage;

  submod::cli::Invocation inv;
  inv.command = chosen->spec->name;
  json config;
  if (!config_path.empty()) {
    auto j = submod::ReadJsonFile(config_path);
    if (!j.ok()) {
      std::cerr << "key 'config': " << j.status().message() << "\n";
      return kExitUsage;
    }
    config = *j;
    if (!config.is_object()) {
      std::cerr << "key 'config': must hold a JSON object\n";
      return kExitUsage;
    }
    // Common keys may live in the config file; flags still win.
    auto take = [&](const char* key, std::string& target, bool want_string) {
      if (!config.contains(key)) return true;
      const json v = config[key];
      config.erase(key);
      if (!target.empty()) return true;
      if (want_string && v.is_string()) {
        target = v.get<std::string>();
      } else if (!want_string && v.is_number_unsigned()) {
        target = std::to_string(v.get<uint64_t>());
      } else {
        std::cerr << "key '" << key << "': wrong type\n";
        return false;
      }
      return true;
    };
    if (!take("seed", seed_text, false) || !take("threads", threads_text, false) ||
        !take("out", out_dir, true) || !take("mode", chosen->mode, true)) {
      return kExitUsage;
    }
  }
  if (!seed_text.empty() && !ParseU64(seed_text, inv.seed)) {
    std::cerr << "key 'seed': expected an unsigned 64-bit integer, got '" << seed_text
              << "'\n";
    return kExitUsage;
  }
  if (!threads_text.empty()) {
    uint64_t threads = 0;
    if (!ParseU64(threads_text, threads) || threads < 1) {
      std::cerr << "key 'threads': expected a positive integer, got '" << threads_text
                << "'\n";
      return kExitUsage;
    }
    submod::SetMaxThreads(static_cast<int>(threads));
  }
  if (!out_dir.empty()) inv.out_dir = out_dir;
  inv.mode = chosen->mode;

  std::map<std::string, std::string> flags;
  for (const auto& [key, opt] : chosen->options) {
    if (opt->count() > 0) flags[key] = chosen->values[key];
  }
  auto params = submod::cli::ResolveParams(*chosen->spec, config, flags);
  if (!params.ok()) {
    std::cerr << params.status().message() << "\n";
    return kExitUsage;
  }
  inv.params = *params;
  return submod::cli::Execute(inv, std::cout, std::cerr);
}
