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

#include "submod/experiments/lower_bound.h"

#include <cmath>
#include <optional>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/random.h"
#include "submod/expanders/bipartite.h"
#include "submod/learners/learners.h"
#include "submod/matroids/family_mb.h"

namespace submod {

absl::StatusOr<LowerBoundLearner> ParseLowerBoundLearner(std::string_view name) {
  if (name == "general") return LowerBoundLearner::kGeneral;
  if (name == "product") return LowerBoundLearner::kProduct;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown learner '", std::string(name), "' (expected general or product)"));
}

absl::StatusOr<LowerBoundResult> RunLowerBoundExperiment(
    const LowerBoundOptions& opt, uint64_t seed) {
  if (opt.b <= 0 || opt.b >= opt.d) {
    return absl::InvalidArgumentError("lower bound needs 0 < b < d");
  }
  if (opt.train_size < 1) return absl::InvalidArgumentError("train_size must be >= 1");
  LowerBoundResult out;
  absl::Status last = absl::OkStatus();
  std::optional<FamilyMB> mb;
  Rng rng(seed, 3);
  for (int attempt = 0; attempt < opt.max_attempts && !mb.has_value(); ++attempt) {
    out.attempts = attempt + 1;
    const uint64_t gs = DeriveSeed(seed, attempt);
    auto graph = SampleExpander(opt.k, opt.n, opt.d, gs);
    if (!graph.ok()) return graph.status();
    auto check = VerifyExpansion(*graph, ExpansionParams{opt.L, opt.epsilon});
    if (!check.ok()) return check.status();
    if (!check->passes) {
      last = absl::FailedPreconditionError("expansion check failed");
      continue;
    }
    Rng coins(gs, 1);
    std::vector<int> marked;
    for (int i = 0; i < opt.k; ++i) {
      if (coins.Bernoulli(0.5)) marked.push_back(i);
    }
    auto built = BuildFamilyMB(*graph, opt.b, opt.d, opt.tau, marked);
    if (!built.ok()) {
      last = built.status();
      continue;
    }
    out.graph_seed = gs;
    out.worst_expansion_ratio = check->worst_ratio;
    mb = *std::move(built);
  }
  if (!mb.has_value()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "no verified family-mb instance in ", opt.max_attempts,
        " attempts: ", last.message()));
  }

  const auto sets = mb->graph.Neighborhoods();
  std::vector<double> truth(opt.k);
  for (int i = 0; i < opt.k; ++i) {
    truth[i] = static_cast<double>(mb->spec.Rank(sets[i]));
  }
  std::vector<char> seen(opt.k, 0);
  std::vector<LabeledSample> samples;
  for (int t = 0; t < opt.train_size; ++t) {
    const int i = rng.UniformInt(opt.k);
    seen[i] = 1;
    samples.push_back({sets[i], truth[i]});
  }
  absl::StatusOr<Hypothesis> h;
  double guarantee = 1;
  if (opt.learner == LowerBoundLearner::kGeneral) {
    h = LearnGeneral(samples, DeriveSeed(seed, 101));
    guarantee = std::sqrt(opt.n + 1.0);
  } else {
    h = LearnProduct(samples, 0.1);
    if (h.ok() && h->kind() == HypothesisKind::kConstant) guarantee = 8;
  }
  if (!h.ok()) return h.status();
  const double scale = std::sqrt(guarantee);
  out.miss_factor = std::sqrt(static_cast<double>(opt.d) / opt.b);

  for (int i = 0; i < opt.k; ++i) {
    LowerBoundRow row;
    row.index = i;
    row.marked = mb->IsMarked(i);
    row.seen = seen[i];
    row.truth = truth[i];
    row.prediction = scale * (*h)(sets[i]);
    const double v = row.prediction, x = row.truth;
    row.miss = v <= 0 || std::max(v / x, x / v) >= out.miss_factor * (1 - 1e-12);
    out.marked += row.marked;
    out.seen += row.seen;
    if (!row.seen && row.miss) ++out.heldout_misses;
    out.rows.push_back(row);
  }
  out.train_coverage = static_cast<double>(out.seen) / opt.k;
  out.miss_fraction = static_cast<double>(out.heldout_misses) / opt.k;
  // Each unseen index misses with probability at least 1/2 over its coin.
  out.standard_error = std::sqrt(0.25 * (opt.k - out.seen)) / opt.k;
  out.threshold = (1 - out.train_coverage) / 2 - 3 * out.standard_error;
  out.passed = out.miss_fraction >= out.threshold;
  return out;
}

}  // namespace submod
