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

#include "submod/experiments/distributions.h"

#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace submod {

ElementSet ProductDistribution::Sample(Rng& rng) const {
  ElementSet s(n());
  for (int i = 0; i < n(); ++i) {
    if (rng.UniformDouble() < p[i]) s.Insert(i);
  }
  return s;
}

absl::StatusOr<ProductDistribution> MakeProductDistribution(std::vector<double> p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0 && p[i] <= 1)) {
      return absl::InvalidArgumentError(
          absl::StrCat("probability p[", i, "] = ", p[i], " is outside [0,1]"));
    }
  }
  return ProductDistribution{std::move(p)};
}

ProductDistribution UniformProduct(int n, double q) {
  return ProductDistribution{std::vector<double>(n, q)};
}

ElementSet SampleProduct(const ProductDistribution& dist, uint64_t seed) {
  Rng rng(seed);
  return dist.Sample(rng);
}

int UniformFamilyDistribution::SampleIndex(Rng& rng) const {
  return rng.UniformInt(static_cast<int>(support.size()));
}

ElementSet UniformFamilyDistribution::Sample(Rng& rng) const {
  return support[SampleIndex(rng)];
}

absl::StatusOr<UniformFamilyDistribution> MakeUniformFamilyDistribution(
    std::vector<ElementSet> support) {
  if (support.empty()) {
    return absl::InvalidArgumentError("uniform family needs a non-empty support");
  }
  for (const auto& s : support) {
    if (s.ground_size() != support.front().ground_size()) {
      return absl::InvalidArgumentError("support sets have different ground sets");
    }
  }
  return UniformFamilyDistribution{std::move(support)};
}

ElementSet UniformSubsetOfSize(int n, int k, Rng& rng) {
  ElementSet s(n);
  if (2 * k > n) {
    return UniformSubsetOfSize(n, n - k, rng).Complement();
  }
  // Floyd's algorithm: k draws, no auxiliary permutation.
  for (int j = n - k; j < n; ++j) {
    const int t = rng.UniformInt(j + 1);
    if (s.Contains(t)) {
      s.Insert(j);
    } else {
      s.Insert(t);
    }
  }
  return s;
}

SetSampler Sampler(const ProductDistribution& dist) {
  return [dist](Rng& rng) { return dist.Sample(rng); };
}

SetSampler Sampler(const UniformFamilyDistribution& dist) {
  return [dist](Rng& rng) { return dist.Sample(rng); };
}

}  // namespace submod
