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

#ifndef SUBMOD_EXPERIMENTS_CORPUS_H_
#define SUBMOD_EXPERIMENTS_CORPUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/set_function.h"
#include "submod/matroids/family_mb.h"
#include "submod/matroids/matroid.h"

namespace submod {

// A monotone, normalized, 1-Lipschitz submodular function with whatever
// exact structure it has: the profile h when f(S) = h(|S|), the matroid
// when f is a rank function.
struct CorpusEntry {
  std::string name;
  SetFunction f;
  std::optional<std::vector<double>> profile;
  std::optional<MatroidSpec> matroid;
};

// Ten or more functions over [n] (n >= 8): four cardinality profiles (|S|,
// min(|S|, n/4), √|S|, |S| - |S|²/2n), and matroid ranks of partition,
// graphic, uncrossed, truncated, pairwise and family-mb kinds. Deterministic
// in (n, seed).
absl::StatusOr<std::vector<CorpusEntry>> BuildCorpus(int n, uint64_t seed);

// Only the matroid-rank members.
absl::StatusOr<std::vector<CorpusEntry>> BuildMatroidCorpus(int n, uint64_t seed);

// Rank of the graphic matroid of a graph on `vertices` vertices whose
// edges are the ground set.
absl::StatusOr<SetFunction> MakeGraphicRank(
    int vertices, const std::vector<std::pair<int, int>>& edges);

// FamilyMB over a sampled expander with each index marked with
// probability 1/2, retrying seeds until the construction succeeds.
absl::StatusOr<FamilyMB> RandomFamilyMB(int k, int n, int d, int64_t b, int tau,
                                        uint64_t seed, int max_attempts = 50);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_CORPUS_H_
