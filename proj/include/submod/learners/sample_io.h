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

#ifndef SUBMOD_LEARNERS_SAMPLE_IO_H_
#define SUBMOD_LEARNERS_SAMPLE_IO_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "submod/core/element_set.h"
#include "submod/core/set_function.h"

namespace submod {

struct LabeledSample {
  ElementSet set;
  double value = 0;

  friend bool operator==(const LabeledSample&, const LabeledSample&) = default;
};

// Values must be finite and >= 0, and all sets must share one ground set.
absl::Status ValidateSamples(const std::vector<LabeledSample>& samples);

// Labels each set with f.
std::vector<LabeledSample> LabelSets(const SetFunction& f,
                                     const std::vector<ElementSet>& sets);

// CSV with header "set,value"; sets as fixed-width hex masks.
std::string SamplesToCsv(const std::vector<LabeledSample>& samples);
absl::StatusOr<std::vector<LabeledSample>> SamplesFromCsv(
    int n, const std::string& text);

}  // namespace submod

#endif  // SUBMOD_LEARNERS_SAMPLE_IO_H_
