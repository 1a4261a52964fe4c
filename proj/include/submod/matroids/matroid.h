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

#ifndef SUBMOD_MATROIDS_MATROID_H_
#define SUBMOD_MATROIDS_MATROID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"
#include "submod/core/set_function.h"
#include "submod/matroids/constraint_family.h"

namespace submod {

enum class MatroidKind {
  kFullUncrossed,
  kTruncated,
  kPartition,
  kPairwise,
  kFamilyMB,
  kTabulated,
  // Arbitrary constraint list accepted without any matroid check; used to
  // demonstrate what goes wrong when the axioms fail.
  kConstraintList,
};

std::string_view MatroidKindName(MatroidKind kind);

// |I ∩ set| <= rhs.
struct Constraint {
  ElementSet set;
  int64_t rhs = 0;
};

// An independence family given by an explicit constraint list and optional
// cardinality cap, or by a table of independent sets. Immutable; copies are
// cheap and share state.
class MatroidSpec {
 public:
  MatroidKind kind() const { return data_->kind; }
  int n() const { return data_->n; }
  const ConstraintFamily& family() const { return data_->family; }
  std::optional<int64_t> cap() const { return data_->cap; }
  std::optional<int> tau() const { return data_->tau; }
  // For kFamilyMB: the marked indices. Otherwise all indices.
  const std::vector<int>& active_indices() const { return data_->active; }
  const std::vector<Constraint>& constraints() const {
    return data_->constraints;
  }

  bool IsIndependent(const ElementSet& I) const;

  // Greedy: scans S in ascending index, keeping an element when the set
  // stays independent.
  int64_t Rank(const ElementSet& S) const;
  // Greedy in the given order (elements outside S are skipped). Equals Rank
  // for every order only when the family is a matroid.
  int64_t GreedyRank(const ElementSet& S, const std::vector<int>& order) const;
  // The greedy set itself.
  ElementSet GreedyBasis(const ElementSet& S) const;

  SetFunction RankFunction() const;

  // Internal constructors used by the builders.
  static MatroidSpec FromConstraints(MatroidKind kind, ConstraintFamily family,
                                     std::vector<Constraint> constraints,
                                     std::optional<int64_t> cap,
                                     std::optional<int> tau,
                                     std::vector<int> active);
  static MatroidSpec FromTable(int n, std::vector<char> independent);

 private:
  struct Data {
    MatroidKind kind;
    int n;
    ConstraintFamily family;
    std::vector<Constraint> constraints;
    std::optional<int64_t> cap;
    std::optional<int> tau;
    std::vector<int> active;
    // element -> indices of constraints containing it
    std::vector<std::vector<int>> by_element;
    // kTabulated only, indexed by mask.
    std::vector<char> table;
  };
  explicit MatroidSpec(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Matroid from all constraints |I ∩ A(J)| <= g(J), J ⊆ [k]. Constraints with
// the same A(J) keep the smallest g. Fails if some g(J) < 0.
absl::StatusOr<MatroidSpec> BuildUncrossed(
    const ConstraintFamily& family, int64_t budget = kLargenessBudget);

// |I| <= d and |I ∩ A(J)| <= g(J) for 1 <= |J| < τ. Requires (d, τ)-largeness.
absl::StatusOr<MatroidSpec> BuildTruncated(
    const ConstraintFamily& family, int64_t d, int tau,
    int64_t budget = kLargenessBudget);

// |I| <= d and |I ∩ A_j| <= b_j. Requires d <= b_i + b_j - |A_i ∩ A_j| for
// all i != j.
absl::StatusOr<MatroidSpec> BuildPairwise(const ConstraintFamily& family,
                                          int64_t d);

// Generalized partition matroid over pairwise-disjoint A_i.
absl::StatusOr<MatroidSpec> BuildPartition(const ConstraintFamily& family);

// Matroid given by its independent sets, indexed by mask (n <= 24). Not
// validated; run CheckMatroidAxioms.
absl::StatusOr<MatroidSpec> BuildTabulated(int n, std::vector<char> independent);

// Unchecked |I ∩ A_i| <= b_i plus optional |I| <= cap.
MatroidSpec BuildConstraintList(const ConstraintFamily& family,
                                std::optional<int64_t> cap);

// Maximum |I| over independent I ⊆ S by enumerating all 2^|S| subsets.
absl::StatusOr<int64_t> BruteRank(const MatroidSpec& spec, const ElementSet& S,
                                  int limit = 24);

}  // namespace submod

#endif  // SUBMOD_MATROIDS_MATROID_H_
