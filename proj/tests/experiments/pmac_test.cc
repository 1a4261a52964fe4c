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

#include "submod/experiments/pmac.h"

#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "submod/core/set_function.h"
#include "submod/experiments/distributions.h"
#include "submod/learners/learners.h"

namespace submod {
namespace {

SetFunction Profile(int n, double (*g)(int)) {
  std::vector<double> h(n + 1);
  for (int k = 0; k <= n; ++k) h[k] = g(k);
  return *MakeCardinalityProfile(h);
}

SetFunction Cardinality(int n) {
  return Profile(n, [](int k) { return double(k); });
}

TEST(RealizedFactorTest, Cases) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(RealizedFactor(0, 0), 1);
  EXPECT_EQ(RealizedFactor(0, 2), inf);
  EXPECT_EQ(RealizedFactor(3, 2), inf);
  EXPECT_EQ(RealizedFactor(2, 6), 3);
  EXPECT_EQ(RealizedFactor(2, 2), 1);
}

TEST(PmacEvaluateTest, ExactHypothesisCoversEverything) {
  const int n = 12;
  const SetFunction f = Profile(n, [](int k) { return std::sqrt(double(k)); });
  auto h = Hypothesis::SqrtLinear(std::vector<double>(n, 1.0), 1.0, ElementSet(n), 1.0);
  ASSERT_TRUE(h.ok());
  const PmacEvaluation e =
      PmacEvaluate(*h, f, Sampler(UniformProduct(n, 0.5)), 1.0, 2000, 1);
  EXPECT_DOUBLE_EQ(e.coverage, 1.0);
  EXPECT_DOUBLE_EQ(e.factor_quantile, 1.0);
}

TEST(PmacEvaluateTest, ZeroHypothesisCoversOnlyEmptySets) {
  const int n = 20;
  const Hypothesis zero = Hypothesis::NullSubcube(ElementSet(n), 0, 0);
  const PmacEvaluation e =
      PmacEvaluate(zero, Cardinality(n), Sampler(UniformProduct(n, 0.5)), 10, 2000, 1);
  EXPECT_EQ(e.coverage, 0.0);
  EXPECT_TRUE(std::isinf(e.factor_quantile));
}

TEST(PmacEvaluateTest, DeterministicAcrossCalls) {
  const int n = 10;
  auto h = Hypothesis::Constant(n, 2.0);
  ASSERT_TRUE(h.ok());
  const auto sampler = Sampler(UniformProduct(n, 0.4));
  const PmacEvaluation a = PmacEvaluate(*h, Cardinality(n), sampler, 2, 3000, 9);
  const PmacEvaluation b = PmacEvaluate(*h, Cardinality(n), sampler, 2, 3000, 9);
  EXPECT_EQ(a.coverage, b.coverage);
  // 2 <= |S| <= 4 under Bin(10, 0.4).
  EXPECT_NEAR(a.coverage, 0.1209324 + 0.2149908 + 0.2508227, 0.03);
}

TEST(RunLearnerTest, GeneralLearnerOnCardinality) {
  const int n = 10;
  const double eps = 0.1;
  const int64_t ell = GeneralSampleSize(n, eps, 0.1);
  auto run = RunGeneralLearner(Cardinality(n), Sampler(UniformProduct(n, 0.5)), eps,
                               ell, 2000, 4);
  ASSERT_TRUE(run.ok()) << run.status();
  EXPECT_EQ(run->ell, ell);
  EXPECT_EQ(run->hypothesis.kind(), HypothesisKind::kSqrtLinear);
  EXPECT_TRUE(run->success);
  EXPECT_GE(run->evaluation.coverage, 1 - eps);
  EXPECT_NEAR(run->evaluation.alpha, std::sqrt(11.0), 1e-12);
}

TEST(RunLearnerTest, ProductLearnerLargeMean) {
  const int n = 2000;
  const double eps = 0.15;
  const ProductDistribution dist = UniformProduct(n, 0.5);
  auto run = RunProductLearner(Cardinality(n), dist, eps,
                               ProductLargeMeanSampleSize(0.1), 1000, 2);
  ASSERT_TRUE(run.ok()) << run.status();
  EXPECT_EQ(run->hypothesis.kind(), HypothesisKind::kConstant);
  EXPECT_NEAR(run->hypothesis.c(), 250, 10);
  EXPECT_DOUBLE_EQ(run->evaluation.coverage, 1.0);
  EXPECT_TRUE(run->success);
}

TEST(RunLearnerTest, BooleanLearnerOnIndicator) {
  const int n = 16;
  // f(S) = 1 when S meets {0, 1}.
  const SetFunction f = MakeCustomFunction(
      n, [](const ElementSet& S) { return double(S.Contains(0) || S.Contains(1)); });
  auto run = RunBooleanLearner(f, Sampler(UniformProduct(n, 0.3)), 0.1,
                               VcSampleSize(n, 0.1, 0.1), 3000, 5);
  ASSERT_TRUE(run.ok()) << run.status();
  EXPECT_TRUE(run->success);
  EXPECT_GE(run->evaluation.coverage, 0.99);
}

}  // namespace
}  // namespace submod
