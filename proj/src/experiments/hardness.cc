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

#include "submod/experiments/hardness.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/random.h"
#include "submod/expanders/bipartite.h"
#include "submod/experiments/distributions.h"

namespace submod {

namespace {

constexpr size_t kMaxWitnesses = 8;

void Record(MinimizationResult& r, const ElementSet& S, int64_t value) {
  ++r.sets_checked;
  if (r.sets_checked == 1 || value < r.brute_min) {
    r.brute_min = value;
    r.argmin.clear();
  }
  if (value == r.brute_min && r.argmin.size() < kMaxWitnesses) r.argmin.push_back(S);
}

double Binomial(int n, int k) {
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

int64_t PredictedValue(bool any_marked, int64_t b, int64_t d) {
  return any_marked ? std::min(b, d) : d;
}

}  // namespace

absl::StatusOr<MinimizationResult> ConstrainedMinDemo(const FamilyMB& instance,
                                                      uint64_t seed,
                                                      int64_t budget) {
  const int n = instance.graph.n;
  const int d = static_cast<int>(instance.d());
  MinimizationResult r;
  r.predicted = PredictedValue(!instance.marked.empty(), instance.b, d);
  const MatroidSpec& spec = instance.spec;
  if (n <= 20 && (int64_t{1} << n) <= budget) {
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
      if (__builtin_popcountll(m) < d) continue;
      const ElementSet S = ElementSet::FromMask(n, m);
      Record(r, S, spec.Rank(S));
    }
    return r;
  }
  if (Binomial(n, d) <= static_cast<double>(budget)) {
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      ElementSet S(n);
      for (int i : idx) S.Insert(i);
      Record(r, S, spec.Rank(S));
      int i = d - 1;
      while (i >= 0 && idx[i] == n - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return r;
  }
  // Sampled: every A_i plus random d-subsets.
  r.exhaustive = false;
  for (const auto& A : instance.graph.Neighborhoods()) Record(r, A, spec.Rank(A));
  Rng rng(seed, 5);
  const int64_t draws = std::min<int64_t>(budget, 200000);
  for (int64_t t = 0; t < draws; ++t) {
    const ElementSet S = UniformSubsetOfSize(n, d, rng);
    Record(r, S, spec.Rank(S));
  }
  return r;
}

absl::StatusOr<StCutInstance> MakeStCutInstance(int d, int n, int k, int64_t b,
                                                int tau,
                                                const std::vector<int>& marked,
                                                uint64_t seed, int64_t budget) {
  if (d < 1 || n % d != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("s-t cut instance needs n divisible by d (n=", n, ", d=", d, ")"));
  }
  auto graph = SamplePartitionedExpander(k, n, d, seed);
  if (!graph.ok()) return graph.status();
  auto mb = BuildFamilyMB(*graph, b, d, tau, marked);
  if (!mb.ok()) return mb.status();
  const int m = n / d;
  MinimizationResult r;
  r.predicted = PredictedValue(!mb->marked.empty(), b, d);
  const double total = std::pow(static_cast<double>(m), d);
  if (total <= static_cast<double>(budget)) {
    std::vector<int> pick(d, 0);
    while (true) {
      ElementSet S(n);
      for (int i = 0; i < d; ++i) S.Insert(i * m + pick[i]);
      Record(r, S, mb->spec.Rank(S));
      int i = d - 1;
      while (i >= 0 && pick[i] == m - 1) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
  } else {
    r.exhaustive = false;
    for (const auto& A : graph->Neighborhoods()) Record(r, A, mb->spec.Rank(A));
    Rng rng(seed, 9);
    for (int64_t t = 0; t < std::min<int64_t>(budget, 200000); ++t) {
      ElementSet S(n);
      for (int i = 0; i < d; ++i) S.Insert(i * m + rng.UniformInt(m));
      Record(r, S, mb->spec.Rank(S));
    }
  }
  return StCutInstance{d, n, *std::move(mb), std::move(r)};
}

absl::StatusOr<VertexCoverInstance> MakeVertexCoverInstance(
    int n, double epsilon, int k, uint64_t seed, int max_retries, int64_t budget) {
  if (n < 2 || n % 2 != 0) {
    return absl::InvalidArgumentError("vertex cover instance needs an even n >= 2");
  }
  if (!(epsilon > 0 && epsilon < 1)) {
    return absl::InvalidArgumentError("epsilon must lie in (0,1)");
  }
  const int edges = n / 2;
  const double overlap_cap = (1 + epsilon) * n / 4;
  Rng rng(seed);
  auto random_cover = [&] {
    ElementSet c(n);
    for (int e = 0; e < edges; ++e) c.Insert(2 * e + (rng.Bernoulli(0.5) ? 1 : 0));
    return c;
  };
  std::vector<ElementSet> covers;
  int retries = 0;
  while (static_cast<int>(covers.size()) < k) {
    ElementSet c = random_cover();
    bool ok = true;
    for (const auto& other : covers) {
      ok = ok && c.IntersectionCount(other) <= overlap_cap;
    }
    if (ok) {
      covers.push_back(std::move(c));
    } else if (++retries > max_retries) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "no cover with overlap <= ", overlap_cap, " after ", max_retries,
          " retries"));
    }
  }
  const int64_t b = static_cast<int64_t>(std::ceil((3 + epsilon) * n / 8 - 1e-9));
  const int64_t d = edges;
  auto family = MakeUniformFamily(n, covers, b);
  if (!family.ok()) return family.status();
  auto spec = BuildPairwise(*family, d);
  if (!spec.ok()) return spec.status();
  MinimizationResult r;
  r.predicted = PredictedValue(k > 0, b, d);
  if (edges <= 30 && (int64_t{1} << edges) <= budget) {
    for (uint64_t m = 0; m < (uint64_t{1} << edges); ++m) {
      ElementSet S(n);
      for (int e = 0; e < edges; ++e) S.Insert(2 * e + ((m >> e) & 1));
      Record(r, S, spec->Rank(S));
    }
  } else {
    r.exhaustive = false;
    for (const auto& c : covers) Record(r, c, spec->Rank(c));
    for (int64_t t = 0; t < std::min<int64_t>(budget, 200000); ++t) {
      const ElementSet S = random_cover();
      Record(r, S, spec->Rank(S));
    }
  }
  return VertexCoverInstance{n, epsilon, b, d, std::move(covers), *std::move(spec),
                             std::move(r)};
}

}  // namespace submod
