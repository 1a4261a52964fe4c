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

#include "submod/matroids/matroid_checks.h"

#include <algorithm>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/parallel.h"

namespace submod {
namespace {

absl::Status CheckLimit(int n, int limit, const char* what) {
  if (n > limit || n > 30) {
    return absl::ResourceExhaustedError(absl::StrCat(
        what, " refused: ground size ", n, " exceeds limit ", limit));
  }
  return absl::OkStatus();
}

struct PairHit {
  bool found = false;
  uint64_t a = 0;
  uint64_t b = 0;
};

}  // namespace

absl::StatusOr<AxiomReport> CheckMatroidAxioms(int n,
                                               const IndependenceOracle& oracle,
                                               int limit) {
  if (auto s = CheckLimit(n, limit, "axiom check"); !s.ok()) return s;
  const uint64_t total = uint64_t{1} << n;
  std::vector<char> indep(total);
  for (uint64_t m = 0; m < total; ++m) {
    indep[m] = oracle(ElementSet::FromMask(n, m)) ? 1 : 0;
  }
  AxiomReport r;
  for (uint64_t m = 0; m < total; ++m) r.independent_sets += indep[m];
  auto fail = [&](const char* axiom, uint64_t a, uint64_t b) {
    r.is_matroid = false;
    r.violated_axiom = axiom;
    r.witness.emplace(ElementSet::FromMask(n, a), ElementSet::FromMask(n, b));
  };
  if (!indep[0]) {
    r.nonempty = false;
    fail("nonempty", 0, 0);
    return r;
  }
  // Downward closure: removing any single element keeps independence.
  for (uint64_t m = 0; m < total; ++m) {
    if (!indep[m]) continue;
    for (uint64_t rest = m; rest != 0; rest &= rest - 1) {
      const uint64_t sub = m & ~(rest & (0 - rest));
      if (!indep[sub]) {
        r.downward_closed = false;
        fail("downward-closure", m, sub);
        return r;
      }
    }
  }
  // aug[I] = elements x ∉ I with I + x independent.
  std::vector<uint64_t> aug(total, 0);
  std::vector<std::vector<uint64_t>> by_size(n + 1);
  const uint64_t full = total - 1;
  for (uint64_t m = 0; m < total; ++m) {
    if (!indep[m]) continue;
    by_size[__builtin_popcountll(m)].push_back(m);
    for (uint64_t rest = full & ~m; rest != 0; rest &= rest - 1) {
      const uint64_t bit = rest & (0 - rest);
      if (indep[m | bit]) aug[m] |= bit;
    }
  }
  std::vector<uint64_t> independents;
  for (uint64_t m = 0; m < total; ++m) {
    if (indep[m]) independents.push_back(m);
  }
  const int64_t count = static_cast<int64_t>(independents.size());
  const int chunks = DefaultChunks(count);
  std::vector<PairHit> hits(chunks);
  ParallelChunks(count, chunks, [&](int c, int64_t begin, int64_t end) {
    for (int64_t i = begin; i < end && !hits[c].found; ++i) {
      const uint64_t a = independents[i];
      const int size = __builtin_popcountll(a);
      if (size == n) continue;
      for (uint64_t b : by_size[size + 1]) {
        if ((b & ~a & aug[a]) == 0) {
          hits[c] = PairHit{true, a, b};
          break;
        }
      }
    }
  });
  for (const PairHit& h : hits) {
    if (h.found) {
      r.exchange = false;
      fail("exchange", h.a, h.b);
      break;
    }
  }
  return r;
}

absl::StatusOr<AxiomReport> CheckMatroidAxioms(const MatroidSpec& spec,
                                               int limit) {
  return CheckMatroidAxioms(
      spec.n(), [&spec](const ElementSet& s) { return spec.IsIndependent(s); },
      limit);
}

absl::StatusOr<std::vector<Constraint>> UncrossingCollection(
    const MatroidSpec& spec, int max_indices) {
  switch (spec.kind()) {
    case MatroidKind::kTabulated:
      return absl::FailedPreconditionError(
          "tabulated matroids expose no constraint collection");
    case MatroidKind::kFullUncrossed:
    case MatroidKind::kPartition:
      return spec.constraints();
    case MatroidKind::kConstraintList: {
      std::vector<Constraint> out = spec.constraints();
      if (spec.cap().has_value()) {
        out.push_back(Constraint{ElementSet::Full(spec.n()), *spec.cap()});
      }
      return out;
    }
    case MatroidKind::kTruncated:
    case MatroidKind::kPairwise:
    case MatroidKind::kFamilyMB:
      break;
  }
  const std::vector<int>& indices = spec.active_indices();
  if (static_cast<int>(indices.size()) > max_indices) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "uncrossing collection refused: ", indices.size(),
        " constraint sets exceed limit ", max_indices));
  }
  const int64_t d = *spec.cap();
  const int tau = *spec.tau();
  std::vector<Constraint> out;
  std::unordered_map<ElementSet, size_t, ElementSetHash> seen;
  auto add = [&](const ElementSet& set, int64_t rhs) {
    auto [it, inserted] = seen.emplace(set, out.size());
    if (inserted) {
      out.push_back(Constraint{set, rhs});
    } else {
      out[it->second].rhs = std::min(out[it->second].rhs, rhs);
    }
  };
  auto status = EnumerateSubfamilies(
      spec.family(), indices, static_cast<int>(indices.size()),
      int64_t{1} << max_indices, [&](const SubfamilyView& v) {
        add(v.union_set, static_cast<int>(v.J.size()) < tau ? v.g : d);
        return true;
      });
  if (!status.ok()) return status;
  add(ElementSet::Full(spec.n()), d);
  return out;
}

absl::StatusOr<UncrossingReport> CheckUncrossing(
    int n, const std::vector<Constraint>& collection, int limit) {
  if (auto s = CheckLimit(n, limit, "uncrossing check"); !s.ok()) return s;
  std::vector<uint64_t> masks;
  std::vector<int64_t> rhs;
  std::unordered_map<uint64_t, int64_t> rhs_of;
  for (const Constraint& c : collection) {
    const uint64_t m = c.set.ToMask();
    auto [it, inserted] = rhs_of.emplace(m, c.rhs);
    if (!inserted) {
      // Duplicate sets: the smaller right-hand side governs.
      it->second = std::min(it->second, c.rhs);
      continue;
    }
    masks.push_back(m);
  }
  for (uint64_t m : masks) rhs.push_back(rhs_of[m]);
  UncrossingReport r;
  r.collection_size = static_cast<int64_t>(masks.size());
  const uint64_t total = uint64_t{1} << n;
  std::vector<int> tight;
  for (uint64_t I = 0; I < total; ++I) {
    bool independent = true;
    tight.clear();
    for (size_t c = 0; c < masks.size(); ++c) {
      const int64_t used = __builtin_popcountll(I & masks[c]);
      if (used > rhs[c]) {
        independent = false;
        break;
      }
      if (used == rhs[c]) tight.push_back(static_cast<int>(c));
    }
    if (!independent) continue;
    ++r.independent_sets;
    for (size_t a = 0; a < tight.size(); ++a) {
      for (size_t b = a + 1; b < tight.size(); ++b) {
        const uint64_t c1 = masks[tight[a]], c2 = masks[tight[b]];
        if ((c1 & c2) == 0) continue;
        auto it = rhs_of.find(c1 | c2);
        if (it != rhs_of.end() &&
            __builtin_popcountll(I & (c1 | c2)) == it->second) {
          continue;
        }
        r.holds = false;
        r.witness = UncrossingWitness{ElementSet::FromMask(n, I),
                                      ElementSet::FromMask(n, c1),
                                      ElementSet::FromMask(n, c2)};
        return r;
      }
    }
  }
  return r;
}

absl::StatusOr<UncrossingReport> CheckUncrossing(const MatroidSpec& spec,
                                                 int limit) {
  if (auto s = CheckLimit(spec.n(), limit, "uncrossing check"); !s.ok()) {
    return s;
  }
  auto collection = UncrossingCollection(spec);
  if (!collection.ok()) return collection.status();
  return CheckUncrossing(spec.n(), *collection, limit);
}

}  // namespace submod
