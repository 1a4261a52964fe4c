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

#include "submod/expanders/bipartite.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/parallel.h"
#include "submod/core/random.h"

namespace submod {

ElementSet BipartiteNeighborhoods::Neighborhood(int u) const {
  ElementSet s(n);
  for (int v : neighbors[u]) s.Insert(v);
  return s;
}

ElementSet BipartiteNeighborhoods::Gamma(const std::vector<int>& left) const {
  ElementSet s(n);
  for (int u : left) {
    for (int v : neighbors[u]) s.Insert(v);
  }
  return s;
}

std::vector<ElementSet> BipartiteNeighborhoods::Neighborhoods() const {
  std::vector<ElementSet> out;
  out.reserve(k);
  for (int u = 0; u < k; ++u) out.push_back(Neighborhood(u));
  return out;
}

absl::StatusOr<BipartiteNeighborhoods> SampleExpander(int k, int n, int d,
                                                      uint64_t seed) {
  if (k < 0 || n < 1 || d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need k >= 0, n >= 1, d >= 1; got k=", k, " n=", n,
                     " d=", d));
  }
  if (d > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("degree d=", d, " exceeds right side n=", n));
  }
  BipartiteNeighborhoods g{k, n, d, std::vector<std::vector<int>>(k)};
  ParallelChunks(k, DefaultChunks(k), [&](int, int64_t begin, int64_t end) {
    for (int64_t u = begin; u < end; ++u) {
      Rng rng(seed, static_cast<uint64_t>(u));
      std::vector<int> draws(d);
      for (int& v : draws) v = rng.UniformInt(n);
      // Replace parallel edges: redraw later copies until distinct.
      std::vector<char> used(n, 0);
      for (int& v : draws) {
        while (used[v]) v = rng.UniformInt(n);
        used[v] = 1;
      }
      std::sort(draws.begin(), draws.end());
      g.neighbors[u] = std::move(draws);
    }
  });
  return g;
}

absl::StatusOr<BipartiteNeighborhoods> SamplePartitionedExpander(
    int k, int n, int d, uint64_t seed,
    const std::optional<ElementSet>& fixed_last) {
  if (k < 1 || n < 1 || d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need k, n, d >= 1; got k=", k, " n=", n, " d=", d));
  }
  if (n % d != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("n=", n, " is not divisible by d=", d));
  }
  if (fixed_last.has_value() &&
      (fixed_last->ground_size() != n || fixed_last->Count() != d)) {
    return absl::InvalidArgumentError(
        absl::StrCat("fixed last neighborhood must be a ", d,
                     "-subset of [", n, "]"));
  }
  const int m = n / d;
  BipartiteNeighborhoods g{k, n, d, std::vector<std::vector<int>>(k)};
  for (int u = 0; u < k; ++u) {
    if (u == k - 1 && fixed_last.has_value()) {
      g.neighbors[u] = fixed_last->Members();
      continue;
    }
    Rng rng(seed, static_cast<uint64_t>(u));
    std::vector<int>& list = g.neighbors[u];
    list.reserve(d);
    for (int block = 0; block < d; ++block) {
      list.push_back(block * m + rng.UniformInt(m));
    }
  }
  return g;
}

int64_t CountLeftSets(int k, int L) {
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t total = 0;
  double binom = 1;
  for (int j = 1; j <= std::min(k, L); ++j) {
    binom = binom * (k - j + 1) / j;
    if (binom + static_cast<double>(total) > 9e18) return kMax;
    total += static_cast<int64_t>(std::llround(binom));
  }
  return total;
}

namespace {

struct Worst {
  bool found = false;
  std::vector<int> set;
  int gamma = 0;
  double ratio = std::numeric_limits<double>::infinity();
  int64_t checked = 0;
};

void Search(const std::vector<ElementSet>& nbrs, int d, int L, int next,
            std::vector<int>& current, std::vector<ElementSet>& unions,
            Worst& worst) {
  const ElementSet& u = unions.back();
  const int gamma = u.Count();
  const double ratio =
      static_cast<double>(gamma) / (static_cast<double>(d) * current.size());
  ++worst.checked;
  if (!worst.found || ratio < worst.ratio) {
    worst.found = true;
    worst.ratio = ratio;
    worst.gamma = gamma;
    worst.set = current;
  }
  if (static_cast<int>(current.size()) == L) return;
  for (int v = next; v < static_cast<int>(nbrs.size()); ++v) {
    current.push_back(v);
    unions.push_back(u | nbrs[v]);
    Search(nbrs, d, L, v + 1, current, unions, worst);
    unions.pop_back();
    current.pop_back();
  }
}

}  // namespace

absl::StatusOr<ExpansionResult> VerifyExpansion(
    const BipartiteNeighborhoods& graph, const ExpansionParams& params,
    int64_t budget) {
  if (params.L < 1 || !(params.epsilon > 0)) {
    return absl::InvalidArgumentError("expansion check needs L >= 1, ε > 0");
  }
  const int64_t count = CountLeftSets(graph.k, params.L);
  if (count > budget) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "expansion check refused: ", count, " left sets exceed budget ",
        budget));
  }
  const std::vector<ElementSet> nbrs = graph.Neighborhoods();
  std::vector<Worst> per_root(graph.k);
  ParallelChunks(graph.k, DefaultChunks(graph.k),
                 [&](int, int64_t begin, int64_t end) {
                   for (int64_t root = begin; root < end; ++root) {
                     std::vector<int> current = {static_cast<int>(root)};
                     // Search keeps a reference to unions.back().
                     std::vector<ElementSet> unions;
                     unions.reserve(params.L + 1);
                     unions.push_back(nbrs[root]);
                     Search(nbrs, graph.d, params.L, root + 1, current, unions,
                            per_root[root]);
                   }
                 });
  ExpansionResult out;
  bool found = false;
  for (const Worst& w : per_root) {
    out.sets_checked += w.checked;
    if (w.found && (!found || w.ratio < out.worst_ratio)) {
      found = true;
      out.worst_ratio = w.ratio;
      out.worst_gamma = w.gamma;
      out.worst_set = w.set;
    }
  }
  out.passes = !found || out.worst_ratio >= (1.0 - params.epsilon) - 1e-9;
  return out;
}

SuccessRate MakeSuccessRate(int64_t successes, int64_t trials) {
  SuccessRate r;
  r.successes = successes;
  r.trials = trials;
  if (trials <= 0) return r;
  constexpr double z = 1.959964;
  const double nt = static_cast<double>(trials);
  const double p = successes / nt;
  const double denom = 1 + z * z / nt;
  const double center = (p + z * z / (2 * nt)) / denom;
  const double half =
      z * std::sqrt(p * (1 - p) / nt + z * z / (4 * nt * nt)) / denom;
  r.frequency = p;
  r.wilson_low = std::max(0.0, center - half);
  r.wilson_high = std::min(1.0, center + half);
  return r;
}

absl::StatusOr<SuccessRate> MeasureSuccessRate(
    const std::function<absl::StatusOr<BipartiteNeighborhoods>(uint64_t)>&
        generate,
    const ExpansionParams& params, int64_t trials, uint64_t seed) {
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  int64_t successes = 0;
  for (int64_t i = 0; i < trials; ++i) {
    auto g = generate(DeriveSeed(seed, i));
    if (!g.ok()) return g.status();
    auto r = VerifyExpansion(*g, params);
    if (!r.ok()) return r.status();
    successes += r->passes;
  }
  return MakeSuccessRate(successes, trials);
}

bool MeetsSamplingHypotheses(int k, int n, int d, const ExpansionParams& p) {
  return k >= 4 && d >= std::log(static_cast<double>(k)) / p.epsilon &&
         n >= 16.0 * p.L * d / p.epsilon;
}

bool MeetsPartitionedHypotheses(int k, int n, int d,
                                const ExpansionParams& p) {
  return k >= 4 && p.L >= d &&
         d >= std::log(static_cast<double>(k)) / p.epsilon &&
         n >= 22.0 * p.L * d / p.epsilon;
}

ExpansionParams DefaultExpansionParams(int k, int d, double log_base) {
  const double lk = std::log(static_cast<double>(k)) / std::log(log_base);
  ExpansionParams p;
  p.L = std::max(1, static_cast<int>(std::floor(d / (2 * lk))));
  p.epsilon = 2 * lk / d;
  return p;
}

}  // namespace submod
