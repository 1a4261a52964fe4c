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

#include "submod/core/element_set.h"

#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "submod/core/random.h"

namespace submod {
namespace {

using ::testing::ElementsAre;

TEST(ElementSetTest, BasicOperations) {
  ElementSet a(10, {1, 3, 5});
  ElementSet b(10, {3, 4});
  EXPECT_EQ(a.Count(), 3);
  EXPECT_TRUE(a.Contains(3));
  EXPECT_FALSE(a.Contains(4));
  EXPECT_THAT((a | b).Members(), ElementsAre(1, 3, 4, 5));
  EXPECT_THAT((a & b).Members(), ElementsAre(3));
  EXPECT_THAT((a - b).Members(), ElementsAre(1, 5));
  EXPECT_EQ(a.IntersectionCount(b), 1);
  EXPECT_TRUE(ElementSet(10, {3}).IsSubsetOf(a));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_EQ(a.Complement().Count(), 7);
  EXPECT_EQ(ElementSet::Full(10).Count(), 10);
  EXPECT_TRUE(ElementSet(10).Empty());
}

TEST(ElementSetTest, FromMembersRejectsOutOfRange) {
  std::vector<int> bad = {0, 5};
  EXPECT_FALSE(ElementSet::FromMembers(5, bad).ok());
  std::vector<int> good = {0, 4};
  ASSERT_TRUE(ElementSet::FromMembers(5, good).ok());
}

TEST(ElementSetTest, HexRoundTrip) {
  ElementSet s(10, {0, 4, 9});
  EXPECT_EQ(s.ToHex(), "211");
  auto parsed = ElementSet::FromHex(10, s.ToHex());
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(*parsed, s);
  EXPECT_FALSE(ElementSet::FromHex(3, "8").ok());
  EXPECT_FALSE(ElementSet::FromHex(8, "zz").ok());
}

// Set algebra agrees with std::set on random multi-word sets.
TEST(ElementSetTest, MatchesStdSetOnRandomInputs) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + rng.UniformInt(200);
    ElementSet a(n), b(n);
    std::set<int> sa, sb;
    for (int e = 0; e < n; ++e) {
      if (rng.Bernoulli(0.4)) {
        a.Insert(e);
        sa.insert(e);
      }
      if (rng.Bernoulli(0.4)) {
        b.Insert(e);
        sb.insert(e);
      }
    }
    std::set<int> u = sa, i, d;
    u.insert(sb.begin(), sb.end());
    for (int e : sa) {
      if (sb.count(e)) {
        i.insert(e);
      } else {
        d.insert(e);
      }
    }
    EXPECT_EQ((a | b).Members(), std::vector<int>(u.begin(), u.end()));
    EXPECT_EQ((a & b).Members(), std::vector<int>(i.begin(), i.end()));
    EXPECT_EQ((a - b).Members(), std::vector<int>(d.begin(), d.end()));
    EXPECT_EQ(a.IsSubsetOf(b), d.empty());
    EXPECT_EQ(a.Complement().Count(), n - a.Count());
    auto hex = ElementSet::FromHex(n, a.ToHex());
    ASSERT_TRUE(hex.ok());
    EXPECT_EQ(*hex, a);
  }
}

TEST(RngTest, StreamsAreDeterministic) {
  Rng a(42, 3), b(42, 3), c(42, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const uint64_t x = a.Next();
    EXPECT_EQ(x, b.Next());
    differs = differs || x != c.Next();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, UniformStaysInRange) {
  Rng rng(1);
  std::vector<int> counts(7);
  for (int i = 0; i < 70000; ++i) ++counts[rng.UniformInt(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.UniformDouble();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace submod
