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

#ifndef SUBMOD_MATROIDS_MATROID_CHECKS_H_
#define SUBMOD_MATROIDS_MATROID_CHECKS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"
#include "submod/matroids/matroid.h"

namespace submod {

struct AxiomReport {
  bool is_matroid = true;
  bool nonempty = true;
  bool downward_closed = true;
  bool exchange = true;
  // "nonempty", "downward-closure" or "exchange"; empty when all hold.
  std::string violated_axiom;
  // Downward closure: (I, J) with J ⊆ I, I independent, J not.
  // Exchange: independent I, J with |I| < |J| and no x ∈ J \ I keeping I + x
  // independent.
  std::optional<std::pair<ElementSet, ElementSet>> witness;
  int64_t independent_sets = 0;
};

using IndependenceOracle = std::function<bool(const ElementSet&)>;

// Exhaustive check of the independence axioms over all 2^n sets. When
// downward closure holds the exchange axiom is checked on pairs with
// |J| = |I| + 1, which is equivalent. The reported witness is the first in
// (I, J) mask order.
absl::StatusOr<AxiomReport> CheckMatroidAxioms(int n,
                                               const IndependenceOracle& oracle,
                                               int limit = 16);
absl::StatusOr<AxiomReport> CheckMatroidAxioms(const MatroidSpec& spec,
                                               int limit = 16);

struct UncrossingWitness {
  ElementSet independent;
  ElementSet c1;
  ElementSet c2;
};

struct UncrossingReport {
  bool holds = true;
  std::optional<UncrossingWitness> witness;
  int64_t collection_size = 0;
  int64_t independent_sets = 0;
};

// The constraint collection whose tightness structure the spec's proof of
// matroidness rests on: A(J) with the smallest right-hand side over J, where
// truncated kinds use d for |J| >= τ and add ([n], d).
absl::StatusOr<std::vector<Constraint>> UncrossingCollection(
    const MatroidSpec& spec, int max_indices = 20);

// For every I in {I : |I ∩ C| <= rhs(C) ∀C} and tight C1, C2 in the
// collection: C1 ∪ C2 is a tight member of the collection or C1 ∩ C2 = ∅.
absl::StatusOr<UncrossingReport> CheckUncrossing(
    int n, const std::vector<Constraint>& collection, int limit = 16);
absl::StatusOr<UncrossingReport> CheckUncrossing(const MatroidSpec& spec,
                                                 int limit = 16);

}  // namespace submod

#endif  // SUBMOD_MATROIDS_MATROID_CHECKS_H_
