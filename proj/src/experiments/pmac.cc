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

#include <algorithm>
#include <cmath>
#include <limits>

#include "submod/core/parallel.h"
#include "submod/core/random.h"

namespace submod {

double RealizedFactor(double h, double f_star) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (h == 0) return f_star == 0 ? 1 : kInf;
  if (h > f_star) return kInf;
  return std::max(1.0, f_star / h);
}

PmacEvaluation PmacEvaluate(const Hypothesis& h, const SetFunction& f_star,
                            const SetSampler& sampler, double alpha,
                            int64_t test_size, uint64_t seed, double epsilon) {
  PmacEvaluation out;
  out.test_size = test_size;
  out.alpha = alpha;
  out.quantile_level = 1 - epsilon;
  if (test_size <= 0) return out;
  std::vector<double> factors(test_size);
  std::vector<char> covered(test_size);
  ParallelChunks(test_size, DefaultChunks(test_size),
                 [&](int chunk, int64_t begin, int64_t end) {
                   Rng rng(seed, static_cast<uint64_t>(chunk));
                   for (int64_t i = begin; i < end; ++i) {
                     const ElementSet S = sampler(rng);
                     const double hv = h(S), fv = f_star(S);
                     factors[i] = RealizedFactor(hv, fv);
                     covered[i] = hv <= fv && fv <= alpha * hv;
                   }
                 });
  int64_t hits = 0;
  for (char c : covered) hits += c;
  out.coverage = static_cast<double>(hits) / test_size;
  std::sort(factors.begin(), factors.end());
  const int64_t idx = std::min<int64_t>(
      test_size - 1,
      static_cast<int64_t>(std::ceil(out.quantile_level * test_size)) - 1);
  out.factor_quantile = factors[std::max<int64_t>(0, idx)];
  return out;
}

std::vector<LabeledSample> DrawSamples(const SetFunction& f,
                                       const SetSampler& sampler, int64_t count,
                                       uint64_t seed) {
  std::vector<LabeledSample> out(count);
  ParallelChunks(count, DefaultChunks(count),
                 [&](int chunk, int64_t begin, int64_t end) {
                   Rng rng(seed, static_cast<uint64_t>(chunk));
                   for (int64_t i = begin; i < end; ++i) {
                     ElementSet S = sampler(rng);
                     const double v = f(S);
                     out[i] = {std::move(S), v};
                   }
                 });
  return out;
}

namespace {

PmacRun Finish(int64_t ell, Hypothesis h, PmacEvaluation eval, double epsilon) {
  PmacRun run;
  run.ell = ell;
  run.hypothesis = std::move(h);
  run.evaluation = eval;
  run.success = eval.coverage >= 1 - epsilon;
  return run;
}

}  // namespace

absl::StatusOr<PmacRun> RunGeneralLearner(const SetFunction& f,
                                          const SetSampler& sampler,
                                          double epsilon, int64_t ell,
                                          int64_t test_size, uint64_t seed,
                                          double alpha) {
  const auto samples = DrawSamples(f, sampler, ell, DeriveSeed(seed, 0));
  auto h = LearnGeneralRobust(samples, alpha, DeriveSeed(seed, 1));
  if (!h.ok()) return h.status();
  const double factor = alpha * std::sqrt(f.ground_size() + 1.0);
  auto eval = PmacEvaluate(*h, f, sampler, factor, test_size,
                           DeriveSeed(seed, 2), epsilon);
  return Finish(ell, *std::move(h), eval, epsilon);
}

absl::StatusOr<PmacRun> RunProductLearner(const SetFunction& f,
                                          const ProductDistribution& dist,
                                          double epsilon, int64_t ell,
                                          int64_t test_size, uint64_t seed,
                                          double factor,
                                          const ProductLearnerOptions& options) {
  const SetSampler sampler = Sampler(dist);
  const auto samples = DrawSamples(f, sampler, ell, DeriveSeed(seed, 0));
  auto h = LearnProduct(samples, epsilon, options);
  if (!h.ok()) return h.status();
  auto eval = PmacEvaluate(*h, f, sampler, factor, test_size,
                           DeriveSeed(seed, 2), epsilon);
  return Finish(ell, *std::move(h), eval, epsilon);
}

absl::StatusOr<PmacRun> RunBooleanLearner(const SetFunction& f,
                                          const SetSampler& sampler,
                                          double epsilon, int64_t ell,
                                          int64_t test_size, uint64_t seed) {
  const auto samples = DrawSamples(f, sampler, ell, DeriveSeed(seed, 0));
  auto h = LearnBoolean(samples);
  if (!h.ok()) return h.status();
  // Held-out error: fraction of test draws with h != f*.
  auto eval = PmacEvaluate(*h, f, sampler, 1.0, test_size, DeriveSeed(seed, 2),
                           epsilon);
  return Finish(ell, *std::move(h), eval, epsilon);
}

}  // namespace submod
