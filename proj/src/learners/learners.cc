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

#include "submod/learners/learners.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/random.h"
#include "submod/learners/linear_feasibility.h"

namespace submod {

namespace {

absl::Status CheckCommon(const std::vector<LabeledSample>& samples) {
  if (samples.empty()) return absl::InvalidArgumentError("no samples");
  return ValidateSamples(samples);
}

absl::Status CheckUnit(double x, const char* name) {
  if (!(x > 0 && x < 1)) {
    return absl::InvalidArgumentError(absl::StrCat(name, " must lie in (0,1)"));
  }
  return absl::OkStatus();
}

ElementSet ZeroUnion(const std::vector<LabeledSample>& samples) {
  ElementSet U(samples.front().set.ground_size());
  for (const auto& s : samples) {
    if (s.value == 0) U |= s.set;
  }
  return U;
}

}  // namespace

absl::StatusOr<Hypothesis> LearnProduct(
    const std::vector<LabeledSample>& samples, double epsilon,
    const ProductLearnerOptions& options) {
  if (auto s = CheckCommon(samples); !s.ok()) return s;
  if (auto s = CheckUnit(epsilon, "epsilon"); !s.ok()) return s;
  if (!(options.eta > 0)) return absl::InvalidArgumentError("eta must be > 0");
  double mu = 0;
  for (const auto& s : samples) mu += s.value;
  mu /= static_cast<double>(samples.size());
  const int n = samples.front().set.ground_size();
  if (mu >= options.threshold * std::log(1 / epsilon) && mu > 0) {
    return Hypothesis::Constant(n, mu / 4);
  }
  return Hypothesis::NullSubcube(ZeroUnion(samples), 0, options.eta);
}

absl::StatusOr<Hypothesis> LearnProductEta(
    const std::vector<LabeledSample>& samples, double epsilon, double eta) {
  ProductLearnerOptions options;
  options.eta = eta;
  return LearnProduct(samples, epsilon, options);
}

std::vector<LiftedSample> LiftSamples(const std::vector<LabeledSample>& samples,
                                      double alpha, uint64_t seed) {
  std::vector<LiftedSample> out;
  if (samples.empty()) return out;
  const int n = samples.front().set.ground_size();
  const double tails_scale = alpha * alpha * (n + 1);
  Rng rng(seed);
  for (size_t i = 0; i < samples.size(); ++i) {
    const double v = samples[i].value;
    if (v == 0) continue;
    LiftedSample p;
    p.sample_index = static_cast<int>(i);
    p.heads = rng.Bernoulli(0.5);
    p.last = p.heads ? v * v : tails_scale * v * v;
    out.push_back(p);
  }
  return out;
}

absl::StatusOr<Hypothesis> LearnGeneralRobust(
    const std::vector<LabeledSample>& samples, double alpha, uint64_t seed,
    const GeneralLearnerOptions& options) {
  if (auto s = CheckCommon(samples); !s.ok()) return s;
  if (!(alpha >= 1)) return absl::InvalidArgumentError("alpha must be >= 1");
  const int n = samples.front().set.ground_size();
  ElementSet zero = ZeroUnion(samples);
  const std::vector<LiftedSample> lifted = LiftSamples(samples, alpha, seed);
  if (lifted.empty()) return Hypothesis::NullSubcube(std::move(zero), 0, 1);
  std::vector<LabeledPoint> points;
  points.reserve(lifted.size());
  for (const auto& p : lifted) {
    points.push_back({samples[p.sample_index].set, p.last, p.heads ? 1 : -1});
  }
  auto solved = SolveLinearFeasibility(n, points, zero, options.margin);
  if (!solved.ok()) return solved.status();
  if (!solved->feasible) {
    std::string which;
    for (size_t t = 0; t < solved->conflict.size() && t < 8; ++t) {
      absl::StrAppend(&which, t ? "," : "",
                      lifted[solved->conflict[t]].sample_index);
    }
    return absl::FailedPreconditionError(absl::StrCat(
        "no linear separator is consistent with the samples (conflicting "
        "samples: ",
        which, "); the target is not within the assumed class"));
  }
  return Hypothesis::SqrtLinear(std::move(solved->separator.w),
                                solved->separator.z, std::move(zero),
                                alpha * alpha * (n + 1));
}

absl::StatusOr<Hypothesis> LearnGeneral(
    const std::vector<LabeledSample>& samples, uint64_t seed,
    const GeneralLearnerOptions& options) {
  return LearnGeneralRobust(samples, 1.0, seed, options);
}

absl::StatusOr<Hypothesis> LearnBoolean(
    const std::vector<LabeledSample>& samples) {
  if (auto s = CheckCommon(samples); !s.ok()) return s;
  const int n = samples.front().set.ground_size();
  bool any_one = false;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double v = samples[i].value;
    if (v != 0 && v != 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample ", i, " has non-boolean value ", v));
    }
    if (v == 1 && samples[i].set.Empty()) return Hypothesis::Constant(n, 1);
    any_one |= v == 1;
  }
  if (!any_one) return Hypothesis::NullSubcube(ElementSet::Full(n), 0, 1);
  // X = [n] minus every zero-labeled set; U is its complement.
  return Hypothesis::NullSubcube(ZeroUnion(samples), 0, 1);
}

int64_t GeneralSampleSize(int n, double epsilon, double delta) {
  return static_cast<int64_t>(
      std::ceil(48.0 * n / epsilon * std::log(9.0 * n / (delta * epsilon))));
}

int64_t ProductSampleSize(int n, double epsilon, double delta) {
  return static_cast<int64_t>(std::ceil(n * std::log(n / delta) / epsilon +
                                        12 * std::log(1 / delta)));
}

int64_t ProductLargeMeanSampleSize(double delta) {
  return static_cast<int64_t>(std::ceil(12 * std::log(1 / delta)));
}

int64_t VcSampleSize(int vc_dimension, double epsilon, double delta) {
  return static_cast<int64_t>(
      std::ceil((4.0 * vc_dimension * std::log2(1 / epsilon) +
                 2 * std::log2(2 / delta)) /
                epsilon));
}

}  // namespace submod
