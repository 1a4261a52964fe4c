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

#include "submod/matroids/gross_substitutes.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "submod/core/set_function.h"
#include "submod/matroids/matroid.h"

namespace submod {
namespace {

TEST(DemandTest, AdditiveDemandsProfitableItems) {
  const std::vector<double> values = {0, 1, 2, 3};  // f(S) = Σ_{i∈S} (i + 1)
  auto d = DemandSets(2, values, {0.5, 3.0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], ElementSet(2, {0}));
  auto tie = DemandSets(2, values, {1.0, 3.0});
  EXPECT_EQ(tie.size(), 2u);
}

TEST(PricePairTest, ComplementsFail) {
  const std::vector<double> values = {0, 0, 0, 2};
  auto bad = CheckPricePair(2, values, {0.4, 0.4}, {0.4, 2.0});
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(*bad, ElementSet(2, {0, 1}));
  EXPECT_FALSE(CheckPricePair(2, values, {0.4, 0.4}, {0.4, 0.4}).has_value());
}

TEST(SpotCheckTest, GrossSubstitutesValuationsPass) {
  auto additive = MakeAdditiveFunction({0.3, 1.1, 0.7, 2.0, 0.5});
  ASSERT_TRUE(additive.ok());
  auto r = GrossSubstitutesSpotCheck(*additive, 2000, 1);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->passed);
  EXPECT_EQ(r->trials_run, 2000);

  auto unit_demand = MakeCustomFunction(
      4,
      [](const ElementSet& s) {
        const double v[] = {1.0, 0.75, 1.5, 0.25};
        double best = 0;
        s.ForEach([&](int i) { best = std::max(best, v[i]); });
        return best;
      },
      "unit-demand");
  EXPECT_TRUE(GrossSubstitutesSpotCheck(unit_demand, 2000, 2)->passed);

  auto family = MakeConstraintFamily(
      6, {ElementSet(6, {0, 1, 2}), ElementSet(6, {2, 3, 4}), ElementSet(6, {4, 5})},
      {2, 2, 1});
  auto spec = BuildUncrossed(*family);
  ASSERT_TRUE(spec.ok());
  EXPECT_TRUE(GrossSubstitutesSpotCheck(spec->RankFunction(), 3000, 3)->passed);
}

TEST(SpotCheckTest, ComplementsCaughtWithWitness) {
  auto complements = MakeTabulatedFunction(2, {0, 0, 0, 2});
  ASSERT_TRUE(complements.ok());
  auto r = GrossSubstitutesSpotCheck(*complements, 1000, 5);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->passed);
  ASSERT_TRUE(r->witness.has_value());
  const auto& w = *r->witness;
  for (int i = 0; i < 2; ++i) EXPECT_LE(w.p[i], w.q[i]);
  EXPECT_EQ(CheckPricePair(2, {0, 0, 0, 2}, w.p, w.q), w.demanded);
}

TEST(SpotCheckTest, RefusesLargeGroundSets) {
  auto big = MakeAdditiveFunction(std::vector<double>(20, 1.0));
  EXPECT_EQ(GrossSubstitutesSpotCheck(*big, 1, 0).status().code(),
            absl::StatusCode::kResourceExhausted);
}

}  // namespace
}  // namespace submod
