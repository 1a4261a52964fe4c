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

#include "submod/experiments/concentration.h"

#include <cmath>

#include "submod/core/parallel.h"

namespace submod {

std::vector<double> SampleValues(const SetFunction& f, const SetSampler& sampler,
                                 int64_t trials, uint64_t seed) {
  std::vector<double> values(trials);
  ParallelChunks(trials, DefaultChunks(trials),
                 [&](int chunk, int64_t begin, int64_t end) {
                   Rng rng(seed, static_cast<uint64_t>(chunk));
                   for (int64_t i = begin; i < end; ++i) values[i] = f(sampler(rng));
                 });
  return values;
}

double FrequencySe(double p, int64_t trials) {
  if (trials <= 0) return 0;
  return std::sqrt(std::max(0.0, p * (1 - p)) / static_cast<double>(trials));
}

TailCheckResult TailCheckFromValues(const std::vector<double>& values, double b,
                                    double t) {
  TailCheckResult r;
  r.b = b;
  r.t = t;
  r.trials = static_cast<int64_t>(values.size());
  r.bound = std::exp(-t * t / 4);
  const double low = b - t * std::sqrt(std::max(0.0, b));
  int64_t lower = 0, upper = 0;
  for (double v : values) {
    lower += v <= low;
    upper += v >= b;
  }
  const double N = std::max<double>(1, r.trials);
  r.lower_prob = lower / N;
  r.upper_prob = upper / N;
  r.lower_se = FrequencySe(r.lower_prob, r.trials);
  r.upper_se = FrequencySe(r.upper_prob, r.trials);
  r.lhs_product = r.lower_prob * r.upper_prob;
  // Delta method with the multinomial covariance. When t√b > 0 the two
  // events are disjoint, so their indicator covariance is -p1 p2 / N.
  const double p1 = r.lower_prob, p2 = r.upper_prob;
  double both = 0;
  if (t * std::sqrt(std::max(0.0, b)) <= 0) {
    for (double v : values) both += (v <= low && v >= b);
    both /= N;
  }
  const double cov = (both - p1 * p2) / N;
  const double var = p2 * p2 * r.lower_se * r.lower_se +
                     p1 * p1 * r.upper_se * r.upper_se + 2 * p1 * p2 * cov;
  r.standard_error = std::sqrt(std::max(0.0, var));
  r.passed = r.lhs_product <= r.bound + 3 * r.standard_error;
  return r;
}

TailCheckResult ConcentrationCheck(const SetFunction& f, const SetSampler& sampler,
                                   double b, double t, int64_t trials,
                                   uint64_t seed) {
  return TailCheckFromValues(SampleValues(f, sampler, trials, seed), b, t);
}

MeanConcentrationResult MeanCheckFromValues(const std::vector<double>& values,
                                            double alpha) {
  MeanConcentrationResult r;
  r.alpha = alpha;
  r.trials = static_cast<int64_t>(values.size());
  if (values.empty()) {
    r.passed = true;
    return r;
  }
  double sum = 0;
  for (double v : values) sum += v;
  r.mean = sum / values.size();
  r.bound = 4 * std::exp(-alpha * alpha * r.mean / 16);
  r.applicable = alpha > 0 && r.mean >= 240 / alpha;
  int64_t far = 0;
  for (double v : values) far += std::abs(v - r.mean) > alpha * r.mean;
  r.tail = static_cast<double>(far) / values.size();
  r.standard_error = FrequencySe(r.tail, r.trials);
  r.passed = !r.applicable || r.tail <= r.bound + 3 * r.standard_error;
  return r;
}

MeanConcentrationResult MeanConcentrationCheck(const SetFunction& f,
                                               const SetSampler& sampler,
                                               double alpha, int64_t trials,
                                               uint64_t seed) {
  return MeanCheckFromValues(SampleValues(f, sampler, trials, seed), alpha);
}

}  // namespace submod
