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

#ifndef SUBMOD_EXPERIMENTS_ARTIFACTS_H_
#define SUBMOD_EXPERIMENTS_ARTIFACTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "json.hpp"

namespace submod {

// Rows of raw trial data; cells are already formatted.
struct CsvTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void AddRow(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string Render() const;
};

// Writes <command>_seed<seed>_<table>.csv files and a
// <command>_seed<seed>.manifest.json listing params, verdicts and every CSV
// with its row count. CSV bodies depend only on their rows; the manifest
// alone carries a timestamp.
class ArtifactWriter {
 public:
  ArtifactWriter(std::string out_dir, std::string command, uint64_t seed);

  void SetParams(nlohmann::json params) { params_ = std::move(params); }
  void AddVerdict(const std::string& name, bool passed);
  void AddResult(const std::string& key, nlohmann::json value);
  absl::Status WriteTable(const CsvTable& table);
  absl::Status Finish();

  std::string TablePath(const std::string& table) const;
  std::string ManifestPath() const;
  bool all_passed() const { return all_passed_; }

 private:
  std::string out_dir_;
  std::string command_;
  uint64_t seed_;
  nlohmann::json params_ = nlohmann::json::object();
  nlohmann::json verdicts_ = nlohmann::json::object();
  nlohmann::json results_ = nlohmann::json::object();
  nlohmann::json tables_ = nlohmann::json::array();
  bool all_passed_ = true;
};

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_ARTIFACTS_H_
