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

#ifndef SUBMOD_EXPERIMENTS_CONCENTRATION_H_
#define SUBMOD_EXPERIMENTS_CONCENTRATION_H_

#include <cstdint>
#include <vector>

#include "submod/core/set_function.h"
#include "submod/experiments/distributions.h"

namespace submod {

// f evaluated on `trials` independent draws. Trial i of chunk c uses
// Rng(seed, c); chunks are fixed by the trial count, so the values do not
// depend on the thread count.
std::vector<double> SampleValues(const SetFunction& f, const SetSampler& sampler,
                                 int64_t trials, uint64_t seed);

// Empirical Pr[f <= b - t√b] · Pr[f >= b] against exp(-t²/4).
struct TailCheckResult {
  double b = 0;
  double t = 0;
  double lower_prob = 0;  // Pr[f <= b - t√b]
  double upper_prob = 0;  // Pr[f >= b]
  double lower_se = 0;
  double upper_se = 0;
  double lhs_product = 0;
  double bound = 0;
  int64_t trials = 0;
  double standard_error = 0;
  bool passed = false;  // lhs_product <= bound + 3 standard errors
};

TailCheckResult TailCheckFromValues(const std::vector<double>& values, double b,
                                    double t);
TailCheckResult ConcentrationCheck(const SetFunction& f, const SetSampler& sampler,
                                   double b, double t, int64_t trials,
                                   uint64_t seed);

// Empirical Pr[|f - Ê| > α Ê] against 4 exp(-α² Ê / 16), applicable when
// Ê >= 240 / α.
struct MeanConcentrationResult {
  bool applicable = false;
  double alpha = 0;
  double mean = 0;
  double tail = 0;
  double bound = 0;
  double standard_error = 0;
  int64_t trials = 0;
  bool passed = false;  // true when not applicable
};

MeanConcentrationResult MeanCheckFromValues(const std::vector<double>& values,
                                            double alpha);
MeanConcentrationResult MeanConcentrationCheck(const SetFunction& f,
                                               const SetSampler& sampler,
                                               double alpha, int64_t trials,
                                               uint64_t seed);

// Standard error of a Bernoulli frequency estimate.
double FrequencySe(double p, int64_t trials);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_CONCENTRATION_H_
