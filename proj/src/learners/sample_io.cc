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

#include "submod/learners/sample_io.h"

#include <charconv>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "submod/core/function_io.h"

namespace submod {

absl::Status ValidateSamples(const std::vector<LabeledSample>& samples) {
  if (samples.empty()) return absl::OkStatus();
  const int n = samples.front().set.ground_size();
  for (size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].set.ground_size() != n) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample ", i, " has ground set size ",
                       samples[i].set.ground_size(), ", expected ", n));
    }
    const double v = samples[i].value;
    if (!std::isfinite(v) || v < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample ", i, " has value ", v, "; values must be >= 0"));
    }
  }
  return absl::OkStatus();
}

std::vector<LabeledSample> LabelSets(const SetFunction& f,
                                     const std::vector<ElementSet>& sets) {
  std::vector<LabeledSample> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back({s, f(s)});
  return out;
}

std::string SamplesToCsv(const std::vector<LabeledSample>& samples) {
  std::string out = "set,value\n";
  for (const auto& s : samples) {
    absl::StrAppend(&out, s.set.ToHex(), ",", FormatDouble(s.value), "\n");
  }
  return out;
}

absl::StatusOr<std::vector<LabeledSample>> SamplesFromCsv(
    int n, const std::string& text) {
  std::vector<LabeledSample> out;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    line = absl::StripSuffix(line, "\r");
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "set,value") {
        return absl::InvalidArgumentError("sample CSV must start with 'set,value'");
      }
      continue;
    }
    std::vector<absl::string_view> cells = absl::StrSplit(line, ',');
    if (cells.size() != 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected 2 cells"));
    }
    auto set = ElementSet::FromHex(n, std::string(cells[0]));
    if (!set.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", set.status().message()));
    }
    double value = 0;
    auto [ptr, ec] =
        std::from_chars(cells[1].data(), cells[1].data() + cells[1].size(), value);
    if (ec != std::errc() || ptr != cells[1].data() + cells[1].size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": bad value '", cells[1], "'"));
    }
    out.push_back({*std::move(set), value});
  }
  if (auto s = ValidateSamples(out); !s.ok()) return s;
  return out;
}

}  // namespace submod
