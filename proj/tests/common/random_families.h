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

#ifndef SUBMOD_TESTS_COMMON_RANDOM_FAMILIES_H_
#define SUBMOD_TESTS_COMMON_RANDOM_FAMILIES_H_

// Seeded generators of small accepted matroid specs, shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "submod/core/random.h"
#include "submod/expanders/bipartite.h"
#include "submod/matroids/family_mb.h"
#include "submod/matroids/matroid.h"

namespace submod::testing {

struct NamedSpec {
  std::string builder;
  MatroidSpec spec;
};

inline ConstraintFamily RandomFamily(Rng& rng, int n, int k, double density) {
  ConstraintFamily f{n, {}, {}};
  for (int i = 0; i < k; ++i) {
    ElementSet s(n);
    for (int e = 0; e < n; ++e) {
      if (rng.Bernoulli(density)) s.Insert(e);
    }
    if (s.Empty()) s.Insert(rng.UniformInt(n));
    f.caps.push_back(rng.UniformInt(s.Count() + 1));
    f.sets.push_back(std::move(s));
  }
  return f;
}

// Largest d for which the family is (d, τ)-large, or -1 if g(J) < 0 for
// some |J| < τ. Direct recomputation of g on every J by mask.
inline int64_t MaxLargeD(const ConstraintFamily& f, int tau, int64_t d_max) {
  int64_t best = d_max;
  const int k = f.k();
  for (uint64_t m = 1; m < (uint64_t{1} << k); ++m) {
    const int size = __builtin_popcountll(m);
    if (size > 2 * tau - 2 && size >= tau) continue;
    std::vector<int> J;
    for (int j = 0; j < k; ++j) {
      if (m >> j & 1) J.push_back(j);
    }
    const int64_t g = GValue(f, J);
    if (size < tau) {
      if (g < 0) return -1;
    } else {
      best = std::min(best, g);
    }
  }
  return best;
}

inline std::optional<NamedSpec> RandomAcceptedSpec(Rng& rng, int builder,
                                                   int max_n) {
  const int n = 2 + rng.UniformInt(max_n - 1);
  switch (builder) {
    case 0: {  // uncrossed: raise caps until every g(J) >= 0
      ConstraintFamily f = RandomFamily(rng, n, 1 + rng.UniformInt(6), 0.45);
      for (int tries = 0; tries < 20; ++tries) {
        auto spec = BuildUncrossed(f);
        if (spec.ok()) return NamedSpec{"uncrossed", *spec};
        for (size_t i = 0; i < f.caps.size(); ++i) {
          f.caps[i] = std::min<int64_t>(f.caps[i] + 1, f.sets[i].Count());
        }
      }
      return std::nullopt;
    }
    case 1: {  // truncated with the largest admissible d, or a random smaller
      ConstraintFamily f = RandomFamily(rng, n, 1 + rng.UniformInt(7), 0.4);
      for (auto& c : f.caps) c = std::max<int64_t>(c, 1);
      const int tau = 1 + rng.UniformInt(3);
      const int64_t dmax = MaxLargeD(f, tau, n);
      if (dmax < 0) return std::nullopt;
      const int64_t d = rng.Bernoulli(0.5) ? dmax : rng.UniformInt(dmax + 1);
      auto spec = BuildTruncated(f, d, tau);
      if (!spec.ok()) return std::nullopt;
      return NamedSpec{"truncated", *spec};
    }
    case 2: {  // pairwise
      ConstraintFamily f = RandomFamily(rng, n, 1 + rng.UniformInt(6), 0.35);
      for (size_t i = 0; i < f.caps.size(); ++i) {
        f.caps[i] = std::max<int64_t>(f.caps[i], (f.sets[i].Count() + 1) / 2);
      }
      int64_t bound = n;
      for (int i = 0; i < f.k(); ++i) {
        for (int j = i + 1; j < f.k(); ++j) {
          bound = std::min(bound, f.caps[i] + f.caps[j] -
                                      f.sets[i].IntersectionCount(f.sets[j]));
        }
      }
      if (bound < 0) return std::nullopt;
      auto spec = BuildPairwise(f, rng.UniformInt(bound + 1));
      if (!spec.ok()) return std::nullopt;
      return NamedSpec{"pairwise", *spec};
    }
    default: {  // family-mb over a small random graph
      const int d = 1 + rng.UniformInt(std::min(4, n));
      const int k = 1 + rng.UniformInt(6);
      auto graph = SampleExpander(k, n, d, rng.Next());
      if (!graph.ok()) return std::nullopt;
      std::vector<int> marked;
      for (int i = 0; i < k; ++i) {
        if (rng.Bernoulli(0.5)) marked.push_back(i);
      }
      const int64_t b = rng.UniformInt(d + 1);
      const int tau = 1 + rng.UniformInt(3);
      auto mb = BuildFamilyMB(*graph, b, d, tau, marked);
      if (!mb.ok()) return std::nullopt;
      return NamedSpec{"family-mb", mb->spec};
    }
  }
}

}  // namespace submod::testing

#endif  // SUBMOD_TESTS_COMMON_RANDOM_FAMILIES_H_
