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

#include <vector>

#include "gtest/gtest.h"
#include "submod/core/random.h"

namespace submod {
namespace {

TEST(ProductDistributionTest, HalfProbabilitySizesConcentrate) {
  const ProductDistribution dist = UniformProduct(1000, 0.5);
  Rng rng(1);
  int inside = 0;
  const int draws = 5000;
  for (int t = 0; t < draws; ++t) {
    const int s = dist.Sample(rng).Count();
    inside += s >= 400 && s <= 600;
  }
  EXPECT_GE(inside, draws * 999 / 1000);
}

TEST(ProductDistributionTest, MarginalsMatch) {
  auto dist = MakeProductDistribution({0.0, 0.2, 0.7, 1.0});
  ASSERT_TRUE(dist.ok());
  Rng rng(2);
  std::vector<int> hits(4, 0);
  const int draws = 20000;
  for (int t = 0; t < draws; ++t) {
    const ElementSet s = dist->Sample(rng);
    for (int e = 0; e < 4; ++e) hits[e] += s.Contains(e);
  }
  EXPECT_EQ(hits[0], 0);
  EXPECT_EQ(hits[3], draws);
  EXPECT_NEAR(hits[1] / double(draws), 0.2, 0.015);
  EXPECT_NEAR(hits[2] / double(draws), 0.7, 0.015);
  EXPECT_FALSE(MakeProductDistribution({0.5, 1.5}).ok());
}

TEST(UniformFamilyTest, SamplesSupportUniformly) {
  auto dist = MakeUniformFamilyDistribution(
      {ElementSet(3, {0}), ElementSet(3, {1, 2}), ElementSet(3)});
  ASSERT_TRUE(dist.ok());
  Rng rng(3);
  std::vector<int> counts(3, 0);
  for (int t = 0; t < 30000; ++t) ++counts[dist->SampleIndex(rng)];
  for (int c : counts) EXPECT_NEAR(c / 30000.0, 1.0 / 3, 0.015);
  EXPECT_FALSE(MakeUniformFamilyDistribution({}).ok());
}

TEST(UniformSubsetTest, ExactSizeAndUniformElements) {
  Rng rng(4);
  std::vector<int> hits(10, 0);
  for (int t = 0; t < 20000; ++t) {
    const int k = t % 2 == 0 ? 3 : 8;
    const ElementSet s = UniformSubsetOfSize(10, k, rng);
    ASSERT_EQ(s.Count(), k);
    for (int e = 0; e < 10; ++e) hits[e] += s.Contains(e);
  }
  // Each element appears with probability (3/10 + 8/10)/2.
  for (int h : hits) EXPECT_NEAR(h / 20000.0, 0.55, 0.02);
}

}  // namespace
}  // namespace submod
