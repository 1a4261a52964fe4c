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

#include "submod/experiments/artifacts.h"

#include <chrono>
#include <ctime>
#include <filesystem>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "submod/core/function_io.h"

namespace submod {

namespace {

std::string CsvCell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string CsvTable::Render() const {
  std::string out;
  std::vector<std::string> cells;
  for (const auto& c : columns) cells.push_back(CsvCell(c));
  absl::StrAppend(&out, absl::StrJoin(cells, ","), "\n");
  for (const auto& row : rows) {
    cells.clear();
    for (const auto& c : row) cells.push_back(CsvCell(c));
    absl::StrAppend(&out, absl::StrJoin(cells, ","), "\n");
  }
  return out;
}

ArtifactWriter::ArtifactWriter(std::string out_dir, std::string command,
                               uint64_t seed)
    : out_dir_(std::move(out_dir)), command_(std::move(command)), seed_(seed) {}

void ArtifactWriter::AddVerdict(const std::string& name, bool passed) {
  verdicts_[name] = passed;
  all_passed_ = all_passed_ && passed;
}

void ArtifactWriter::AddResult(const std::string& key, nlohmann::json value) {
  results_[key] = std::move(value);
}

std::string ArtifactWriter::TablePath(const std::string& table) const {
  return (std::filesystem::path(out_dir_) /
          absl::StrCat(command_, "_seed", seed_, "_", table, ".csv"))
      .string();
}

std::string ArtifactWriter::ManifestPath() const {
  return (std::filesystem::path(out_dir_) /
          absl::StrCat(command_, "_seed", seed_, ".manifest.json"))
      .string();
}

absl::Status ArtifactWriter::WriteTable(const CsvTable& table) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir_, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create output directory ", out_dir_, ": ", ec.message()));
  }
  const std::string path = TablePath(table.name);
  if (auto s = WriteTextFile(path, table.Render()); !s.ok()) return s;
  tables_.push_back({{"name", table.name},
                     {"file", std::filesystem::path(path).filename().string()},
                     {"rows", table.rows.size()},
                     {"columns", table.columns}});
  return absl::OkStatus();
}

absl::Status ArtifactWriter::Finish() {
  std::error_code ec;
  std::filesystem::create_directories(out_dir_, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create output directory ", out_dir_, ": ", ec.message()));
  }
  nlohmann::json manifest;
  manifest["command"] = command_;
  manifest["seed"] = seed_;
  manifest["params"] = params_;
  manifest["verdicts"] = verdicts_;
  manifest["all_passed"] = all_passed_;
  manifest["results"] = results_;
  manifest["tables"] = tables_;
  manifest["created"] = Timestamp();
  return WriteJsonFile(ManifestPath(), manifest);
}

}  // namespace submod
