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

#ifndef SUBMOD_EXPERIMENTS_DISTRIBUTIONS_H_
#define SUBMOD_EXPERIMENTS_DISTRIBUTIONS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"
#include "submod/core/random.h"

namespace submod {

// Draws one set from a distribution over subsets of [n].
using SetSampler = std::function<ElementSet(Rng&)>;

struct ProductDistribution {
  std::vector<double> p;

  int n() const { return static_cast<int>(p.size()); }
  ElementSet Sample(Rng& rng) const;
};

absl::StatusOr<ProductDistribution> MakeProductDistribution(std::vector<double> p);
// Every element with the same probability q (R(q)).
ProductDistribution UniformProduct(int n, double q);

// One draw from Rng(seed).
ElementSet SampleProduct(const ProductDistribution& dist, uint64_t seed);

struct UniformFamilyDistribution {
  std::vector<ElementSet> support;

  ElementSet Sample(Rng& rng) const;
  int SampleIndex(Rng& rng) const;
};

absl::StatusOr<UniformFamilyDistribution> MakeUniformFamilyDistribution(
    std::vector<ElementSet> support);

// Uniform k-subset of [n] (S(k)), by a partial Fisher-Yates shuffle.
ElementSet UniformSubsetOfSize(int n, int k, Rng& rng);

SetSampler Sampler(const ProductDistribution& dist);
SetSampler Sampler(const UniformFamilyDistribution& dist);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_DISTRIBUTIONS_H_
