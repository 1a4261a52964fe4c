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

#include "submod/core/properties.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "submod/core/random.h"
#include "submod/core/set_function.h"

namespace submod {
namespace {

// Reference verdicts straight from the definitions, on member lists.
struct NaiveVerdict {
  bool monotone = true;
  bool marginal = true;
  bool lattice = true;
  double lipschitz = 0;
};

NaiveVerdict NaiveCheck(const SetFunction& f) {
  const int n = f.ground_size();
  NaiveVerdict out;
  const int total = 1 << n;
  std::vector<ElementSet> sets;
  for (int m = 0; m < total; ++m) {
    ElementSet s(n);
    for (int e = 0; e < n; ++e) {
      if (m & (1 << e)) s.Insert(e);
    }
    sets.push_back(s);
  }
  for (const auto& s : sets) {
    for (int x = 0; x < n; ++x) {
      if (s.Contains(x)) continue;
      const double gain = f(s.With(x)) - f(s);
      out.lipschitz = std::max(out.lipschitz, std::fabs(gain));
      if (gain < -1e-9) out.monotone = false;
    }
    for (const auto& t : sets) {
      if (f(s) + f(t) < f(s | t) + f(s & t) - 1e-9) out.lattice = false;
      if (!s.IsSubsetOf(t)) continue;
      for (int x = 0; x < n; ++x) {
        if (t.Contains(x)) continue;
        if (f(t.With(x)) - f(t) > f(s.With(x)) - f(s) + 1e-9) {
          out.marginal = false;
        }
      }
    }
  }
  return out;
}

TEST(PropertiesTest, CoverageIsMonotoneSubmodular) {
  auto f = MakeCoverageFunction(3, {ElementSet(3, {0, 1}), ElementSet(3, {1, 2})});
  ASSERT_TRUE(f.ok());
  auto r = CheckProperties(*f);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->normalized);
  EXPECT_TRUE(r->nonnegative);
  EXPECT_TRUE(r->monotone);
  EXPECT_TRUE(r->submodular);
  EXPECT_TRUE(r->witnesses.empty());
}

TEST(PropertiesTest, TriangleCutIsSubmodularNotMonotone) {
  auto f = MakeCutFunction(3, {{0, 1}, {1, 2}, {0, 2}});
  ASSERT_TRUE(f.ok());
  auto r = CheckProperties(*f);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->submodular);
  EXPECT_FALSE(r->monotone);
  ASSERT_FALSE(r->witnesses.empty());
  EXPECT_EQ(r->witnesses[0].property, "monotone");
  EXPECT_LT(r->witnesses[0].lhs, r->witnesses[0].rhs);
}

TEST(PropertiesTest, SquareIsNotSubmodularWithFirstWitness) {
  std::vector<double> h;
  for (int j = 0; j <= 4; ++j) h.push_back(j * j);
  auto f = MakeCardinalityProfile(h);
  ASSERT_TRUE(f.ok());
  auto r = CheckProperties(*f);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->submodular);
  EXPECT_FALSE(r->submodular_marginal);
  EXPECT_FALSE(r->submodular_lattice);
  const PropertyWitness* first = nullptr;
  for (const auto& w : r->witnesses) {
    if (w.property == "submodular-marginal") {
      first = &w;
      break;
    }
  }
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(first->s, ElementSet(4));
  EXPECT_EQ(first->t, ElementSet(4, {0}));
  EXPECT_EQ(first->x, 1);
  EXPECT_LE(r->witnesses.size(), 10u);
}

TEST(PropertiesTest, TruncatedIdentityIsOneLipschitz) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<double> h;
    for (int j = 0; j <= n; ++j) h.push_back(std::min(j, 3));
    auto f = MakeCardinalityProfile(h);
    ASSERT_TRUE(f.ok());
    auto r = CheckProperties(*f);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(r->monotone && r->submodular && r->normalized);
    EXPECT_DOUBLE_EQ(r->lipschitz_constant, 1.0);
  }
}

TEST(PropertiesTest, RefusesOversizedGroundSet) {
  auto f = MakeCardinalityProfile(std::vector<double>(18, 0.0));
  ASSERT_TRUE(f.ok());
  auto r = CheckProperties(*f);
  EXPECT_EQ(r.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_NE(r.status().message().find("16"), std::string::npos);
}

// Both submodularity forms agree with each other and with the naive oracle
// on random functions, both submodular (coverage) and arbitrary (tables).
TEST(PropertiesTest, AgreesWithNaiveOracleOnRandomFunctions) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + rng.UniformInt(6);
    SetFunction f = MakeCustomFunction(n, [](const ElementSet&) { return 0.0; });
    if (trial % 3 == 0) {
      std::vector<double> values(1 << n);
      for (double& v : values) v = rng.UniformInt(4);
      values[0] = 0;
      f = *MakeTabulatedFunction(n, values);
    } else {
      const int m = 1 + rng.UniformInt(8);
      std::vector<ElementSet> subsets;
      for (int i = 0; i < n; ++i) {
        ElementSet s(m);
        for (int e = 0; e < m; ++e) {
          if (rng.Bernoulli(0.4)) s.Insert(e);
        }
        subsets.push_back(s);
      }
      std::vector<double> w(m);
      for (double& x : w) x = rng.UniformDouble();
      f = *MakeCoverageFunction(m, subsets, w);
    }
    auto r = CheckProperties(f);
    ASSERT_TRUE(r.ok());
    const NaiveVerdict naive = NaiveCheck(f);
    EXPECT_EQ(r->monotone, naive.monotone);
    EXPECT_EQ(r->submodular_marginal, naive.marginal);
    EXPECT_EQ(r->submodular_lattice, naive.lattice);
    EXPECT_TRUE(r->DefinitionsAgree());
    EXPECT_NEAR(r->lipschitz_constant, naive.lipschitz, 1e-12);
    if (trial % 3 != 0) EXPECT_TRUE(r->monotone && r->submodular);
    if (!r->submodular || !r->monotone) EXPECT_FALSE(r->witnesses.empty());
  }
}

TEST(PropertiesTest, SampledModeFindsViolationsAndPassesCoverage) {
  std::vector<double> h;
  for (int j = 0; j <= 20; ++j) h.push_back(j * j);
  auto square = MakeCardinalityProfile(h);
  ASSERT_TRUE(square.ok());
  PropertyReport r = CheckPropertiesSampled(*square, 500, 1);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_FALSE(r.submodular);
  EXPECT_FALSE(r.witnesses.empty());

  std::vector<double> concave;
  for (int j = 0; j <= 20; ++j) concave.push_back(std::sqrt(j));
  auto root = MakeCardinalityProfile(concave);
  ASSERT_TRUE(root.ok());
  PropertyReport ok = CheckPropertiesSampled(*root, 500, 1);
  EXPECT_TRUE(ok.submodular && ok.monotone);
}

TEST(MinimizerLatticeTest, Examples) {
  auto constant = MakeCardinalityProfile(std::vector<double>(5, 2.0));
  ASSERT_TRUE(constant.ok());
  auto c = CheckMinimizerLattice(*constant);
  ASSERT_TRUE(c.ok());
  EXPECT_TRUE(c->closed);
  EXPECT_EQ(c->num_minimizers, 16);

  auto identity = MakeCardinalityProfile({0, 1, 2, 3});
  auto id = CheckMinimizerLattice(*identity);
  ASSERT_TRUE(id.ok());
  EXPECT_EQ(id->num_minimizers, 1);

  auto triangle = MakeCutFunction(3, {{0, 1}, {1, 2}, {0, 2}});
  auto t = CheckMinimizerLattice(*triangle);
  ASSERT_TRUE(t.ok());
  EXPECT_TRUE(t->closed);
  EXPECT_EQ(t->num_minimizers, 2);

  auto square = MakeCardinalityProfile({0, 1, 4});
  EXPECT_EQ(CheckMinimizerLattice(*square).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

// Minimizers of random submodular functions (coverage minus a modular term)
// always form a lattice.
TEST(MinimizerLatticeTest, RandomSubmodularFunctionsAreClosed) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + rng.UniformInt(8);
    const int m = 3 + rng.UniformInt(6);
    std::vector<ElementSet> subsets;
    for (int i = 0; i < n; ++i) {
      ElementSet s(m);
      for (int e = 0; e < m; ++e) {
        if (rng.Bernoulli(0.5)) s.Insert(e);
      }
      subsets.push_back(s);
    }
    auto cover = *MakeCoverageFunction(m, subsets);
    std::vector<double> mod(n);
    for (double& x : mod) x = rng.UniformInt(3);
    SetFunction f = MakeCustomFunction(n, [cover, mod](const ElementSet& s) {
      double v = cover(s);
      s.ForEach([&](int e) { v -= mod[e]; });
      return v;
    });
    auto r = CheckMinimizerLattice(f);
    ASSERT_TRUE(r.ok()) << r.status();
    EXPECT_TRUE(r->closed);
  }
}

}  // namespace
}  // namespace submod
