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

#ifndef SUBMOD_EXPERIMENTS_PMAC_H_
#define SUBMOD_EXPERIMENTS_PMAC_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/set_function.h"
#include "submod/experiments/distributions.h"
#include "submod/learners/hypothesis.h"
#include "submod/learners/learners.h"

namespace submod {

// Smallest φ with h <= f* <= φ h: 1 when both are 0, +inf when h > f* or
// h = 0 < f*.
double RealizedFactor(double h, double f_star);

struct PmacEvaluation {
  int64_t test_size = 0;
  double alpha = 1;
  double coverage = 0;          // fraction with h <= f* <= α h
  double factor_quantile = 0;   // empirical (1-ε)-quantile of the factor
  double quantile_level = 0.9;
};

// Test draws use Rng(seed, chunk) as in SampleValues.
PmacEvaluation PmacEvaluate(const Hypothesis& h, const SetFunction& f_star,
                            const SetSampler& sampler, double alpha,
                            int64_t test_size, uint64_t seed,
                            double epsilon = 0.1);

// One end-to-end learning run. Training draws use DeriveSeed(seed, 0),
// learner coins DeriveSeed(seed, 1), test draws DeriveSeed(seed, 2).
struct PmacRun {
  int64_t ell = 0;
  Hypothesis hypothesis = Hypothesis::NullSubcube(ElementSet(0), 0, 1);
  PmacEvaluation evaluation;
  bool success = false;  // coverage >= 1 - ε
};

std::vector<LabeledSample> DrawSamples(const SetFunction& f,
                                       const SetSampler& sampler, int64_t count,
                                       uint64_t seed);

absl::StatusOr<PmacRun> RunGeneralLearner(const SetFunction& f,
                                          const SetSampler& sampler,
                                          double epsilon, int64_t ell,
                                          int64_t test_size, uint64_t seed,
                                          double alpha = 1);

absl::StatusOr<PmacRun> RunProductLearner(const SetFunction& f,
                                          const ProductDistribution& dist,
                                          double epsilon, int64_t ell,
                                          int64_t test_size, uint64_t seed,
                                          double factor = 8,
                                          const ProductLearnerOptions& options = {});

absl::StatusOr<PmacRun> RunBooleanLearner(const SetFunction& f,
                                          const SetSampler& sampler,
                                          double epsilon, int64_t ell,
                                          int64_t test_size, uint64_t seed);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_PMAC_H_
