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

#ifndef SUBMOD_MATROIDS_GROSS_SUBSTITUTES_H_
#define SUBMOD_MATROIDS_GROSS_SUBSTITUTES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"
#include "submod/core/set_function.h"

namespace submod {

using PriceVector = std::vector<double>;

// Demand correspondence D(p) = argmax_S f(S) - Σ_{i∈S} p_i, by enumeration of
// a value table. Ties within `tolerance` count as maximizers.
std::vector<ElementSet> DemandSets(int n, const std::vector<double>& values,
                                   const PriceVector& prices,
                                   double tolerance = 1e-9);

struct GrossSubstitutesOptions {
  // Prices are drawn from {0, step, 2 step, ..., max_price}; a dyadic step
  // keeps utility ties exact.
  double price_step = 0.125;
  double max_price = 2.0;
  int limit = 16;
  double tolerance = 1e-9;
};

struct GrossSubstitutesWitness {
  PriceVector p;
  PriceVector q;
  ElementSet demanded;  // A ∈ D(p) with no A' ∈ D(q) covering its fixed items
};

struct GrossSubstitutesResult {
  bool passed = true;
  int64_t trials_run = 0;
  std::optional<GrossSubstitutesWitness> witness;
};

// For random p and q >= p (q raises a random non-empty subset of
// coordinates), checks that every A ∈ D(p) has some A' ∈ D(q) containing
// {i ∈ A : p_i = q_i}. Stops at the first failure.
absl::StatusOr<GrossSubstitutesResult> GrossSubstitutesSpotCheck(
    const SetFunction& f, int64_t trials, uint64_t seed,
    const GrossSubstitutesOptions& options = {});

// Checks one price pair; returns the violating A ∈ D(p) if any.
std::optional<ElementSet> CheckPricePair(int n,
                                         const std::vector<double>& values,
                                         const PriceVector& p,
                                         const PriceVector& q,
                                         double tolerance = 1e-9);

}  // namespace submod

#endif  // SUBMOD_MATROIDS_GROSS_SUBSTITUTES_H_
