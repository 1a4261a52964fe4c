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

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/random.h"

namespace submod {
namespace {

std::vector<uint64_t> DemandMasks(int n, const std::vector<double>& values,
                                  const PriceVector& prices, double tolerance) {
  const uint64_t total = uint64_t{1} << n;
  std::vector<double> utility(total);
  double best = -std::numeric_limits<double>::infinity();
  for (uint64_t m = 0; m < total; ++m) {
    double cost = 0;
    for (uint64_t rest = m; rest != 0; rest &= rest - 1) {
      cost += prices[__builtin_ctzll(rest)];
    }
    utility[m] = values[m] - cost;
    best = std::max(best, utility[m]);
  }
  std::vector<uint64_t> out;
  for (uint64_t m = 0; m < total; ++m) {
    if (utility[m] >= best - tolerance) out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<ElementSet> DemandSets(int n, const std::vector<double>& values,
                                   const PriceVector& prices,
                                   double tolerance) {
  std::vector<ElementSet> out;
  for (uint64_t m : DemandMasks(n, values, prices, tolerance)) {
    out.push_back(ElementSet::FromMask(n, m));
  }
  return out;
}

std::optional<ElementSet> CheckPricePair(int n,
                                         const std::vector<double>& values,
                                         const PriceVector& p,
                                         const PriceVector& q,
                                         double tolerance) {
  uint64_t unchanged = 0;
  for (int i = 0; i < n; ++i) {
    if (p[i] == q[i]) unchanged |= uint64_t{1} << i;
  }
  const std::vector<uint64_t> dp = DemandMasks(n, values, p, tolerance);
  const std::vector<uint64_t> dq = DemandMasks(n, values, q, tolerance);
  for (uint64_t a : dp) {
    const uint64_t keep = a & unchanged;
    bool covered = false;
    for (uint64_t b : dq) {
      if ((keep & ~b) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return ElementSet::FromMask(n, a);
  }
  return std::nullopt;
}

absl::StatusOr<GrossSubstitutesResult> GrossSubstitutesSpotCheck(
    const SetFunction& f, int64_t trials, uint64_t seed,
    const GrossSubstitutesOptions& options) {
  const int n = f.ground_size();
  if (n > options.limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "gross-substitutes check refused: ground size ", n, " exceeds limit ",
        options.limit));
  }
  if (!(options.price_step > 0) || options.max_price < options.price_step) {
    return absl::InvalidArgumentError("price grid needs 0 < step <= max");
  }
  auto values = Tabulate(f, options.limit);
  if (!values.ok()) return values.status();
  const int levels =
      static_cast<int>(std::floor(options.max_price / options.price_step));
  Rng rng(seed, 0x6a055);
  GrossSubstitutesResult result;
  for (int64_t t = 0; t < trials; ++t) {
    ++result.trials_run;
    PriceVector p(n), q(n);
    for (int i = 0; i < n; ++i) {
      p[i] = options.price_step * rng.UniformInt(levels + 1);
    }
    // Raise a uniformly random non-empty subset of coordinates.
    uint64_t raised = 0;
    while (raised == 0 && n > 0) {
      raised = rng.Next() & ((uint64_t{1} << n) - 1);
    }
    for (int i = 0; i < n; ++i) {
      q[i] = p[i];
      if (raised >> i & 1) {
        q[i] += options.price_step * (1 + rng.UniformInt(levels));
      }
    }
    auto bad = CheckPricePair(n, *values, p, q, options.tolerance);
    if (bad.has_value()) {
      result.passed = false;
      result.witness = GrossSubstitutesWitness{p, q, *bad};
      break;
    }
  }
  return result;
}

}  // namespace submod
