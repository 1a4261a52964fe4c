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

#include "submod/experiments/binomial.h"

#include <cmath>
#include <vector>

#include "boost/math/distributions/binomial.hpp"
#include "gtest/gtest.h"

namespace submod {
namespace {

TEST(BinomialTest, MatchesBoost) {
  for (int n : {1, 7, 30, 200}) {
    for (double p : {0.05, 0.3, 0.5, 0.9}) {
      boost::math::binomial_distribution<double> ref(n, p);
      double total = 0;
      for (int k = 0; k <= n; ++k) {
        EXPECT_NEAR(BinomialPmf(n, p, k), boost::math::pdf(ref, k), 1e-12);
        EXPECT_NEAR(BinomialCdf(n, p, k), boost::math::cdf(ref, k), 1e-10);
        total += BinomialPmf(n, p, k);
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
      EXPECT_NEAR(BinomialUpperTail(n, p, n / 2),
                  n / 2 == 0 ? 1.0 : boost::math::cdf(boost::math::complement(ref, n / 2 - 1)),
                  1e-10);
    }
  }
}

TEST(BinomialTest, DegenerateProbabilities) {
  EXPECT_EQ(BinomialPmf(5, 0.0, 0), 1.0);
  EXPECT_EQ(BinomialPmf(5, 0.0, 1), 0.0);
  EXPECT_EQ(BinomialPmf(5, 1.0, 5), 1.0);
  EXPECT_EQ(BinomialPmf(5, 0.5, 6), 0.0);
}

TEST(ProfileTest, LinearProfileMeanIsNp) {
  std::vector<double> h(41);
  for (int k = 0; k <= 40; ++k) h[k] = k;
  EXPECT_NEAR(ProfileMean(h, 0.25), 10.0, 1e-10);
  boost::math::binomial_distribution<double> ref(40, 0.25);
  EXPECT_NEAR(ProfileLowerTail(h, 0.25, 7), boost::math::cdf(ref, 7), 1e-10);
  EXPECT_NEAR(ProfileUpperTail(h, 0.25, 13),
              boost::math::cdf(boost::math::complement(ref, 12)), 1e-10);
}

}  // namespace
}  // namespace submod
