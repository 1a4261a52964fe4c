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

#ifndef SUBMOD_CORE_PROPERTIES_H_
#define SUBMOD_CORE_PROPERTIES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"
#include "submod/core/set_function.h"

namespace submod {

// A violating (S, T, x) triple. x is -1 when the property does not involve
// an added element (normalization, non-negativity, the pair form of
// submodularity).
struct PropertyWitness {
  std::string property;
  ElementSet s;
  ElementSet t;
  int x = -1;
  double lhs = 0;
  double rhs = 0;
};

struct PropertyReport {
  int ground_size = 0;
  bool exhaustive = false;
  bool normalized = true;
  bool nonnegative = true;
  bool monotone = true;
  bool submodular = true;
  // Marginal form: f(T+x) - f(T) <= f(S+x) - f(S) for S ⊆ T, x ∉ T.
  bool submodular_marginal = true;
  // Lattice form: f(S) + f(T) >= f(S∪T) + f(S∩T).
  bool submodular_lattice = true;
  // False when the lattice form was sampled because n exceeded
  // lattice_exhaustive_limit.
  bool lattice_exhaustive = true;
  bool integer_valued = true;
  double lipschitz_constant = 0;
  int64_t checks = 0;
  std::vector<PropertyWitness> witnesses;

  bool DefinitionsAgree() const {
    return submodular_marginal == submodular_lattice;
  }
};

struct PropertyCheckOptions {
  int exhaustive_limit = 16;
  // The lattice form costs 4^n; above this size it is sampled.
  int lattice_exhaustive_limit = 14;
  int64_t lattice_samples = int64_t{1} << 22;
  double tolerance = 1e-9;
  int max_witnesses = 10;
  uint64_t seed = 0;
};

// Exhaustive check over the whole subset lattice. Refuses ground sets larger
// than options.exhaustive_limit.
absl::StatusOr<PropertyReport> CheckProperties(
    const SetFunction& f, const PropertyCheckOptions& options = {});

// Sampled check: `trials` draws of S ⊆ T (independent per-element three-way
// choice) with x ∉ T for the marginal form, and `trials` independent pairs
// for the lattice form.
PropertyReport CheckPropertiesSampled(const SetFunction& f, int64_t trials,
                                      uint64_t seed,
                                      const PropertyCheckOptions& options = {});

struct MinimizerLattice {
  bool closed = true;
  double min_value = 0;
  int64_t num_minimizers = 0;
  // First pair (in enumeration order) whose union or intersection is not a
  // minimizer.
  std::optional<std::pair<ElementSet, ElementSet>> counterexample;
};

// Checks that the global minimizers of a submodular f are closed under union
// and intersection. Returns FailedPrecondition if f is not submodular.
absl::StatusOr<MinimizerLattice> CheckMinimizerLattice(
    const SetFunction& f, const PropertyCheckOptions& options = {});

}  // namespace submod

#endif  // SUBMOD_CORE_PROPERTIES_H_
