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

#include "submod/matroids/matroid.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace submod {

std::string_view MatroidKindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kFullUncrossed:
      return "uncrossed";
    case MatroidKind::kTruncated:
      return "truncated";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kPairwise:
      return "pairwise";
    case MatroidKind::kFamilyMB:
      return "family-mb";
    case MatroidKind::kTabulated:
      return "tabulated";
    case MatroidKind::kConstraintList:
      return "constraint-list";
  }
  return "unknown";
}

MatroidSpec MatroidSpec::FromConstraints(MatroidKind kind,
                                         ConstraintFamily family,
                                         std::vector<Constraint> constraints,
                                         std::optional<int64_t> cap,
                                         std::optional<int> tau,
                                         std::vector<int> active) {
  auto data = std::make_shared<Data>();
  data->kind = kind;
  data->n = family.n;
  data->family = std::move(family);
  data->constraints = std::move(constraints);
  data->cap = cap;
  data->tau = tau;
  data->active = std::move(active);
  data->by_element.resize(data->n);
  for (size_t c = 0; c < data->constraints.size(); ++c) {
    data->constraints[c].set.ForEach(
        [&](int e) { data->by_element[e].push_back(static_cast<int>(c)); });
  }
  return MatroidSpec(std::move(data));
}

MatroidSpec MatroidSpec::FromTable(int n, std::vector<char> independent) {
  auto data = std::make_shared<Data>();
  data->kind = MatroidKind::kTabulated;
  data->n = n;
  data->family.n = n;
  data->by_element.resize(n);
  data->table = std::move(independent);
  return MatroidSpec(std::move(data));
}

bool MatroidSpec::IsIndependent(const ElementSet& I) const {
  if (data_->kind == MatroidKind::kTabulated) {
    return data_->table[I.ToMask()] != 0;
  }
  if (data_->cap.has_value() && I.Count() > *data_->cap) return false;
  for (const Constraint& c : data_->constraints) {
    if (I.IntersectionCount(c.set) > c.rhs) return false;
  }
  return true;
}

int64_t MatroidSpec::GreedyRank(const ElementSet& S,
                                const std::vector<int>& order) const {
  const Data& d = *data_;
  int64_t size = 0;
  if (d.kind == MatroidKind::kTabulated) {
    uint64_t current = 0;
    for (int e : order) {
      if (!S.Contains(e)) continue;
      const uint64_t next = current | (uint64_t{1} << e);
      if (next != current && d.table[next]) {
        current = next;
        ++size;
      }
    }
    return size;
  }
  std::vector<int64_t> used(d.constraints.size(), 0);
  std::vector<char> taken(d.n, 0);
  for (int e : order) {
    if (!S.Contains(e) || taken[e]) continue;
    if (d.cap.has_value() && size >= *d.cap) break;
    bool fits = true;
    for (int c : d.by_element[e]) {
      if (used[c] >= d.constraints[c].rhs) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    for (int c : d.by_element[e]) ++used[c];
    taken[e] = 1;
    ++size;
  }
  return size;
}

ElementSet MatroidSpec::GreedyBasis(const ElementSet& S) const {
  const Data& d = *data_;
  ElementSet basis(d.n);
  if (d.kind == MatroidKind::kTabulated) {
    S.ForEach([&](int e) {
      if (d.table[basis.With(e).ToMask()]) basis.Insert(e);
    });
    return basis;
  }
  std::vector<int64_t> used(d.constraints.size(), 0);
  int64_t size = 0;
  S.ForEach([&](int e) {
    if (d.cap.has_value() && size >= *d.cap) return;
    for (int c : d.by_element[e]) {
      if (used[c] >= d.constraints[c].rhs) return;
    }
    for (int c : d.by_element[e]) ++used[c];
    basis.Insert(e);
    ++size;
  });
  return basis;
}

int64_t MatroidSpec::Rank(const ElementSet& S) const {
  return GreedyBasis(S).Count();
}

SetFunction MatroidSpec::RankFunction() const {
  MatroidSpec self = *this;
  auto exact = [self](const ElementSet& s) { return self.Rank(s); };
  return SetFunction(
      n(), FunctionKind::kMatroidRank,
      [exact](const ElementSet& s) { return static_cast<double>(exact(s)); },
      exact, std::string(MatroidKindName(kind())) + "-rank");
}

namespace {

std::vector<int> AllIndices(int k) {
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Collects A(J) -> min g(J) for 1 <= |J| <= max_size, in first-seen order.
absl::StatusOr<std::vector<Constraint>> CollectUnions(
    const ConstraintFamily& family, const std::vector<int>& indices,
    int max_size, int64_t budget, std::vector<int>* negative_witness,
    int64_t* negative_g) {
  std::vector<Constraint> out;
  std::unordered_map<ElementSet, size_t, ElementSetHash> seen;
  auto status = EnumerateSubfamilies(
      family, indices, max_size, budget, [&](const SubfamilyView& v) {
        if (v.g < 0 && negative_witness != nullptr) {
          *negative_witness = v.J;
          *negative_g = v.g;
          return false;
        }
        auto [it, inserted] = seen.emplace(v.union_set, out.size());
        if (inserted) {
          out.push_back(Constraint{v.union_set, v.g});
        } else {
          out[it->second].rhs = std::min(out[it->second].rhs, v.g);
        }
        return true;
      });
  if (!status.ok()) return status;
  return out;
}

std::string JString(const std::vector<int>& J) {
  return absl::StrCat("{", absl::StrJoin(J, ","), "}");
}

}  // namespace

absl::StatusOr<MatroidSpec> BuildUncrossed(const ConstraintFamily& family,
                                           int64_t budget) {
  std::vector<int> witness;
  int64_t g = 0;
  auto constraints = CollectUnions(family, AllIndices(family.k()), family.k(),
                                   budget, &witness, &g);
  if (!constraints.ok()) return constraints.status();
  if (!witness.empty()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "independent-set family is empty: g(J) = ", g, " < 0 for J = ",
        JString(witness)));
  }
  return MatroidSpec::FromConstraints(MatroidKind::kFullUncrossed, family,
                                      *std::move(constraints), std::nullopt,
                                      std::nullopt, AllIndices(family.k()));
}

absl::StatusOr<MatroidSpec> BuildTruncated(const ConstraintFamily& family,
                                           int64_t d, int tau, int64_t budget) {
  auto large = IsDtauLarge(family, d, tau, budget);
  if (!large.ok()) return large.status();
  if (!large->large) {
    return absl::FailedPreconditionError(absl::StrCat(
        "g is not (", d, ",", tau, ")-large: g(J) = ", large->violating_g,
        " for J = ", JString(large->violating_set)));
  }
  auto constraints = CollectUnions(family, AllIndices(family.k()), tau - 1,
                                   budget, nullptr, nullptr);
  if (!constraints.ok()) return constraints.status();
  return MatroidSpec::FromConstraints(MatroidKind::kTruncated, family,
                                      *std::move(constraints), d, tau,
                                      AllIndices(family.k()));
}

absl::StatusOr<MatroidSpec> BuildPairwise(const ConstraintFamily& family,
                                          int64_t d) {
  for (int i = 0; i < family.k(); ++i) {
    for (int j = i + 1; j < family.k(); ++j) {
      const int64_t bound = family.caps[i] + family.caps[j] -
                            family.sets[i].IntersectionCount(family.sets[j]);
      if (d > bound) {
        return absl::FailedPreconditionError(absl::StrCat(
            "pairwise condition fails for (i,j) = (", i, ",", j, "): d = ", d,
            " > b_i + b_j - |A_i ∩ A_j| = ", bound));
      }
    }
  }
  std::vector<Constraint> constraints;
  for (int i = 0; i < family.k(); ++i) {
    constraints.push_back(Constraint{family.sets[i], family.caps[i]});
  }
  return MatroidSpec::FromConstraints(MatroidKind::kPairwise, family,
                                      std::move(constraints), d, 2,
                                      AllIndices(family.k()));
}

absl::StatusOr<MatroidSpec> BuildPartition(const ConstraintFamily& family) {
  ElementSet seen(family.n);
  std::vector<Constraint> constraints;
  for (int i = 0; i < family.k(); ++i) {
    if (seen.Intersects(family.sets[i])) {
      return absl::FailedPreconditionError(
          absl::StrCat("partition block ", i, " overlaps an earlier block"));
    }
    seen |= family.sets[i];
    constraints.push_back(Constraint{family.sets[i], family.caps[i]});
  }
  return MatroidSpec::FromConstraints(MatroidKind::kPartition, family,
                                      std::move(constraints), std::nullopt,
                                      std::nullopt, AllIndices(family.k()));
}

absl::StatusOr<MatroidSpec> BuildTabulated(int n,
                                           std::vector<char> independent) {
  if (n < 0 || n > 24) {
    return absl::InvalidArgumentError(
        absl::StrCat("tabulated matroid ground size ", n, " outside [0, 24]"));
  }
  if (independent.size() != (size_t{1} << n)) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected 2^", n, " independence flags, got ",
                     independent.size()));
  }
  return MatroidSpec::FromTable(n, std::move(independent));
}

MatroidSpec BuildConstraintList(const ConstraintFamily& family,
                                std::optional<int64_t> cap) {
  std::vector<Constraint> constraints;
  for (int i = 0; i < family.k(); ++i) {
    constraints.push_back(Constraint{family.sets[i], family.caps[i]});
  }
  return MatroidSpec::FromConstraints(MatroidKind::kConstraintList, family,
                                      std::move(constraints), cap,
                                      std::nullopt, AllIndices(family.k()));
}

absl::StatusOr<int64_t> BruteRank(const MatroidSpec& spec, const ElementSet& S,
                                  int limit) {
  const std::vector<int> members = S.Members();
  const int m = static_cast<int>(members.size());
  if (m > limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "brute-force rank refused: |S| = ", m, " exceeds limit ", limit));
  }
  int64_t best = 0;
  for (uint64_t sub = 0; sub < (uint64_t{1} << m); ++sub) {
    const int size = __builtin_popcountll(sub);
    if (size <= best) continue;
    ElementSet I(spec.n());
    for (int i = 0; i < m; ++i) {
      if (sub >> i & 1) I.Insert(members[i]);
    }
    if (spec.IsIndependent(I)) best = size;
  }
  return best;
}

}  // namespace submod
