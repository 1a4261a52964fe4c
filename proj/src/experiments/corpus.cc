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

#include "submod/experiments/corpus.h"

#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/random.h"
#include "submod/expanders/bipartite.h"

namespace submod {

namespace {

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

CorpusEntry FromSpec(std::string name, const MatroidSpec& spec) {
  SetFunction rank = spec.RankFunction().WithName(name);
  return CorpusEntry{std::move(name), std::move(rank), std::nullopt, spec};
}

ConstraintFamily RandomSets(Rng& rng, int n, int k, int size) {
  ConstraintFamily f{n, {}, {}};
  for (int i = 0; i < k; ++i) {
    ElementSet s(n);
    while (s.Count() < size) s.Insert(rng.UniformInt(n));
    f.sets.push_back(s);
    f.caps.push_back(0);
  }
  return f;
}

}  // namespace

absl::StatusOr<SetFunction> MakeGraphicRank(
    int vertices, const std::vector<std::pair<int, int>>& edges) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      return absl::InvalidArgumentError("edge endpoint out of range");
    }
  }
  const int m = static_cast<int>(edges.size());
  auto eval = [vertices, edges](const ElementSet& S) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    int rank = 0;
    S.ForEach([&](int e) {
      const int a = Find(parent, edges[e].first), b = Find(parent, edges[e].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    });
    return static_cast<double>(rank);
  };
  return MakeCustomFunction(m, eval, "graphic-rank");
}

absl::StatusOr<FamilyMB> RandomFamilyMB(int k, int n, int d, int64_t b, int tau,
                                        uint64_t seed, int max_attempts) {
  absl::Status last = absl::OkStatus();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const uint64_t s = DeriveSeed(seed, attempt);
    auto graph = SampleExpander(k, n, d, s);
    if (!graph.ok()) return graph.status();
    Rng rng(s, 1);
    std::vector<int> marked;
    for (int i = 0; i < k; ++i) {
      if (rng.Bernoulli(0.5)) marked.push_back(i);
    }
    auto mb = BuildFamilyMB(*graph, b, d, tau, marked);
    if (mb.ok()) return mb;
    last = mb.status();
  }
  return absl::FailedPreconditionError(absl::StrCat(
      "no family-mb instance after ", max_attempts, " attempts: ", last.message()));
}

absl::StatusOr<std::vector<CorpusEntry>> BuildCorpus(int n, uint64_t seed) {
  if (n < 8) return absl::InvalidArgumentError("corpus needs n >= 8");
  std::vector<CorpusEntry> out;
  auto add_profile = [&](std::string name, std::vector<double> h) -> absl::Status {
    auto f = MakeCardinalityProfile(h);
    if (!f.ok()) return f.status();
    out.push_back({name, f->WithName(name), std::move(h), std::nullopt});
    return absl::OkStatus();
  };
  std::vector<double> card(n + 1), budget(n + 1), root(n + 1), quad(n + 1);
  for (int k = 0; k <= n; ++k) {
    card[k] = k;
    budget[k] = std::min(k, n / 4);
    root[k] = std::sqrt(static_cast<double>(k));
    quad[k] = k - static_cast<double>(k) * k / (2.0 * n);
  }
  for (auto& [name, h] : std::vector<std::pair<std::string, std::vector<double>>>{
           {"cardinality", card}, {"budget", budget}, {"sqrt-cardinality", root},
           {"quadratic-concave", quad}}) {
    if (auto s = add_profile(name, h); !s.ok()) return s;
  }

  Rng rng(seed, 7);
  // Partition matroid: 4 blocks covering [n], caps about a third of each.
  {
    ConstraintFamily f{n, std::vector<ElementSet>(4, ElementSet(n)), {}};
    for (int e = 0; e < n; ++e) f.sets[e % 4].Insert(e);
    for (int i = 0; i < 4; ++i) f.caps.push_back(1 + f.sets[i].Count() / 3);
    auto spec = BuildPartition(f);
    if (!spec.ok()) return spec.status();
    out.push_back(FromSpec("partition", *spec));
  }
  // Graphic matroid of a random graph with n edges on about n/2 vertices.
  {
    const int v = std::max(3, n / 2);
    std::vector<std::pair<int, int>> edges;
    while (static_cast<int>(edges.size()) < n) {
      const int a = rng.UniformInt(v), b = rng.UniformInt(v);
      if (a != b) edges.emplace_back(a, b);
    }
    auto g = MakeGraphicRank(v, edges);
    if (!g.ok()) return g.status();
    out.push_back({"graphic", *g, std::nullopt, std::nullopt});
  }
  // Uncrossed family of 5 random sets with caps raised until g >= 0.
  {
    ConstraintFamily f = RandomSets(rng, n, 5, std::max(2, n / 3));
    for (int i = 0; i < 5; ++i) f.caps[i] = f.sets[i].Count() / 2;
    absl::StatusOr<MatroidSpec> spec = BuildUncrossed(f);
    while (!spec.ok()) {
      for (int i = 0; i < 5; ++i) {
        f.caps[i] = std::min<int64_t>(f.caps[i] + 1, f.sets[i].Count());
      }
      spec = BuildUncrossed(f);
    }
    out.push_back(FromSpec("uncrossed", *spec));
  }
  // Truncated family: sparse sets with b = |A| - 1 and d = |A|, τ = 2.
  {
    const int m = std::max(3, n / 4);
    for (int attempt = 0;; ++attempt) {
      ConstraintFamily f = RandomSets(rng, n, 4, m);
      for (auto& c : f.caps) c = m - 1;
      auto spec = BuildTruncated(f, m, 2);
      if (spec.ok()) {
        out.push_back(FromSpec("truncated", *spec));
        break;
      }
      if (attempt == 200) return spec.status();
    }
  }
  // Pairwise: 6 sets of size n/3 with b = |A| / 2 + 1.
  {
    const int m = std::max(2, n / 3);
    for (int attempt = 0;; ++attempt) {
      ConstraintFamily f = RandomSets(rng, n, 6, m);
      for (auto& c : f.caps) c = m / 2 + 1;
      int64_t bound = n;
      for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
          bound = std::min(bound, f.caps[i] + f.caps[j] -
                                      f.sets[i].IntersectionCount(f.sets[j]));
        }
      }
      if (bound > 0) {
        auto spec = BuildPairwise(f, bound);
        if (spec.ok()) {
          out.push_back(FromSpec("pairwise", *spec));
          break;
        }
      }
      if (attempt == 200) return absl::InternalError("pairwise corpus member failed");
    }
  }
  // Family-mb over a sampled graph.
  {
    const int d = std::max(3, n / 4);
    auto mb = RandomFamilyMB(8, n, d, (d + 1) / 2 + 1, 2, DeriveSeed(seed, 11));
    if (!mb.ok()) return mb.status();
    out.push_back(FromSpec("family-mb", mb->spec));
  }
  return out;
}

absl::StatusOr<std::vector<CorpusEntry>> BuildMatroidCorpus(int n, uint64_t seed) {
  auto all = BuildCorpus(n, seed);
  if (!all.ok()) return all.status();
  std::vector<CorpusEntry> out;
  for (auto& e : *all) {
    if (e.matroid.has_value() || e.name == "graphic" || e.name == "cardinality" ||
        e.name == "budget") {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace submod
