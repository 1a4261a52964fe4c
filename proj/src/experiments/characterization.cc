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

#include "submod/experiments/characterization.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "submod/core/parallel.h"
#include "submod/core/random.h"
#include "submod/experiments/concentration.h"

namespace submod {

CharacterizationCurve CharacterizationCurveFor(const SetFunction& f,
                                               uint64_t seed,
                                               const CharacterizationOptions& opt) {
  const int n = f.ground_size();
  const int64_t T = opt.samples_per_k;
  CharacterizationCurve c;
  c.n = n;
  c.samples_per_k = T;
  c.epsilon = opt.epsilon;
  const double log_term = std::log(1 / opt.epsilon);
  c.lower_factor = opt.c_low * log_term;
  c.upper_factor = opt.c_high * log_term;

  // product[t][k] = f(R(k/n)), uniform[t][k] = f(S(k)).
  std::vector<std::vector<double>> product(T), uniform(T);
  ParallelChunks(T, DefaultChunks(T), [&](int chunk, int64_t begin, int64_t end) {
    Rng rng(seed, static_cast<uint64_t>(chunk));
    std::vector<double> u(n);
    std::vector<int> order(n);
    for (int64_t t = begin; t < end; ++t) {
      for (auto& x : u) x = rng.UniformDouble();
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return u[a] < u[b]; });
      product[t].resize(n + 1);
      uniform[t].resize(n + 1);
      ElementSet S(n);
      uniform[t][0] = f(S);
      for (int k = 1; k <= n; ++k) {
        S.Insert(order[k - 1]);
        uniform[t][k] = f(S);
      }
      for (int k = 0; k <= n; ++k) {
        // R(k/n) is the prefix of `order` below the cut k/n.
        const double cut = static_cast<double>(k) / n;
        ElementSet R(n);
        for (int i = 0; i < n && u[order[i]] < cut; ++i) R.Insert(order[i]);
        product[t][k] = f(R);
      }
    }
  });

  c.h_hat.assign(n + 1, 0);
  c.h_se.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    double s = 0, s2 = 0;
    for (int64_t t = 0; t < T; ++t) {
      s += product[t][k];
      s2 += product[t][k] * product[t][k];
    }
    c.h_hat[k] = s / T;
    const double var = T > 1 ? (s2 - s * s / T) / (T - 1) : 0;
    c.h_se[k] = std::sqrt(std::max(0.0, var) / T);
  }

  c.coverage.assign(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) {
    const double lo = c.h_hat[k] / c.lower_factor;
    const double hi = c.h_hat[k] * c.upper_factor;
    int64_t in = 0;
    for (int64_t t = 0; t < T; ++t) {
      const double v = uniform[t][k];
      in += v >= lo && v <= hi;
      if (v > 0) {
        c.needed_c_low = std::max(c.needed_c_low, c.h_hat[k] / v / log_term);
      } else if (c.h_hat[k] > 0) {
        c.needed_c_low = std::numeric_limits<double>::infinity();
      }
      if (c.h_hat[k] > 0) {
        c.needed_c_high = std::max(c.needed_c_high, v / c.h_hat[k] / log_term);
      } else if (v > 0) {
        c.needed_c_high = std::numeric_limits<double>::infinity();
      }
    }
    c.coverage[k] = static_cast<double>(in) / T;
    c.min_coverage = std::min(c.min_coverage, c.coverage[k]);
  }

  c.max_second_excess = -std::numeric_limits<double>::infinity();
  for (int k = 1; k < n; ++k) {
    double s = 0, s2 = 0;
    for (int64_t t = 0; t < T; ++t) {
      const double d = product[t][k + 1] - 2 * product[t][k] + product[t][k - 1];
      s += d;
      s2 += d * d;
    }
    const double mean = s / T;
    const double var = T > 1 ? (s2 - s * s / T) / (T - 1) : 0;
    const double se = std::sqrt(std::max(0.0, var) / T);
    c.second_diff.push_back(mean);
    c.second_diff_se.push_back(se);
    c.max_second_excess = std::max(c.max_second_excess, mean - 3 * se);
  }
  c.concave_ok = c.max_second_excess <= 1e-12;

  double top = 0;
  for (int64_t t = 0; t < T; ++t) top = std::max(top, uniform[t][n]);
  const int count = std::max(1, opt.max_thresholds);
  for (int i = 0; i < count; ++i) {
    const double tau = top * i / count;
    if (c.thresholds.empty() || tau > c.thresholds.back()) c.thresholds.push_back(tau);
  }
  for (double tau : c.thresholds) {
    std::vector<double> gu(n + 1), gp(n + 1);
    for (int k = 0; k <= n; ++k) {
      int64_t above_u = 0, above_p = 0;
      for (int64_t t = 0; t < T; ++t) {
        above_u += uniform[t][k] > tau;
        above_p += product[t][k] > tau;
      }
      gu[k] = static_cast<double>(above_u) / T;
      gp[k] = static_cast<double>(above_p) / T;
    }
    for (int k = 0; k < n; ++k) {
      const double se = std::hypot(FrequencySe(gu[k], T), FrequencySe(gu[k + 1], T));
      if (gu[k] > gu[k + 1] + 3 * se) ++c.monotone_violations;
    }
    for (int k = 0; k <= n; ++k) {
      const double se =
          std::hypot(FrequencySe(gu[k], T), 2 * FrequencySe(gp[k], T));
      if (gu[k] > 2 * gp[k] + 3 * se) ++c.poisson_violations;
    }
  }
  return c;
}

}  // namespace submod
