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

#ifndef SUBMOD_LEARNERS_LEARNERS_H_
#define SUBMOD_LEARNERS_LEARNERS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/learners/hypothesis.h"
#include "submod/learners/sample_io.h"

namespace submod {

struct PmacParams {
  double epsilon = 0.1;
  double delta = 0.1;
  double alpha = 1;
  int64_t ell = 1;
};

// Learner for product distributions. If the sample mean μ is at least
// threshold · ln(1/ε) returns the constant μ/4, otherwise the null subcube
// over the union of zero-valued samples with high value eta.
struct ProductLearnerOptions {
  double threshold = 450;
  double eta = 1;
};
absl::StatusOr<Hypothesis> LearnProduct(
    const std::vector<LabeledSample>& samples, double epsilon,
    const ProductLearnerOptions& options = {});
absl::StatusOr<Hypothesis> LearnProductEta(
    const std::vector<LabeledSample>& samples, double epsilon, double eta);

// Learner for arbitrary distributions through a linear separator in the
// lifted space (χ(A), value²). One fair coin per non-zero sample, drawn in
// input order from Rng(seed).
struct GeneralLearnerOptions {
  double margin = 1e-6;
};
absl::StatusOr<Hypothesis> LearnGeneral(
    const std::vector<LabeledSample>& samples, uint64_t seed,
    const GeneralLearnerOptions& options = {});
absl::StatusOr<Hypothesis> LearnGeneralRobust(
    const std::vector<LabeledSample>& samples, double alpha, uint64_t seed,
    const GeneralLearnerOptions& options = {});

// The lifted points the general learner separates, with the coins it would
// flip. Exposed for inspection.
struct LiftedSample {
  int sample_index = 0;
  bool heads = false;
  double last = 0;  // value² if heads, α²(n+1)·value² if tails
};
std::vector<LiftedSample> LiftSamples(const std::vector<LabeledSample>& samples,
                                      double alpha, uint64_t seed);

// Disjunction learner for 0/1-valued monotone submodular targets. The
// result is a null subcube: 0 exactly on sets avoiding the learned
// variables X = [n] \ U.
absl::StatusOr<Hypothesis> LearnBoolean(
    const std::vector<LabeledSample>& samples);

// Sample sizes.
int64_t GeneralSampleSize(int n, double epsilon, double delta);
// n ln(n/δ)/ε + 12 ln(1/δ), rounded up.
int64_t ProductSampleSize(int n, double epsilon, double delta);
// 12 ln(1/δ) when E f* is known to be large, rounded up.
int64_t ProductLargeMeanSampleSize(double delta);
// (1/ε)(4D log2(1/ε) + 2 log2(2/δ)), rounded up.
int64_t VcSampleSize(int vc_dimension, double epsilon, double delta);

}  // namespace submod

#endif  // SUBMOD_LEARNERS_LEARNERS_H_
