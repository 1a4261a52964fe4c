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

#ifndef SUBMOD_CORE_SET_FUNCTION_H_
#define SUBMOD_CORE_SET_FUNCTION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "submod/core/element_set.h"

namespace submod {

enum class FunctionKind {
  kCoverage,
  kCut,
  kMatroidRank,
  kTabulated,
  kCardinalityProfile,
  kCustom,
};

std::string_view FunctionKindName(FunctionKind kind);

// An evaluatable map 2^[n] -> R. Copies share the evaluator; evaluation must
// be pure and thread-safe.
class SetFunction {
 public:
  using Evaluator = std::function<double(const ElementSet&)>;
  using ExactEvaluator = std::function<int64_t(const ElementSet&)>;

  SetFunction(int ground_size, FunctionKind kind, Evaluator evaluator,
              ExactEvaluator exact = nullptr, std::string name = "");

  int ground_size() const { return ground_size_; }
  FunctionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  double operator()(const ElementSet& s) const { return (*evaluator_)(s); }
  double Evaluate(const ElementSet& s) const { return (*evaluator_)(s); }

  // Integer-valued functions expose an exact path.
  bool has_exact() const { return exact_ != nullptr; }
  int64_t EvaluateExact(const ElementSet& s) const { return (*exact_)(s); }

  SetFunction WithName(std::string name) const;

 private:
  int ground_size_;
  FunctionKind kind_;
  std::shared_ptr<const Evaluator> evaluator_;
  std::shared_ptr<const ExactEvaluator> exact_;
  std::string name_;
};

// f(I) = w(∪_{i∈I} S_i), with unit weights when `weights` is empty.
absl::StatusOr<SetFunction> MakeCoverageFunction(
    int universe_size, std::vector<ElementSet> subsets,
    std::optional<std::vector<double>> weights = std::nullopt);

// f(U) = number of edges with exactly one endpoint in U.
absl::StatusOr<SetFunction> MakeCutFunction(
    int n, const std::vector<std::pair<int, int>>& edges);

// f(S) = h[|S|]; h has n+1 entries.
absl::StatusOr<SetFunction> MakeCardinalityProfile(std::vector<double> h);

// values[mask] = f(set with bit i <=> element i). values.size() == 2^n.
absl::StatusOr<SetFunction> MakeTabulatedFunction(int n,
                                                  std::vector<double> values);

// f(S) = Σ_{i∈S} v_i.
absl::StatusOr<SetFunction> MakeAdditiveFunction(std::vector<double> values);

// f(S) = min(budget, Σ_{i∈S} v_i).
absl::StatusOr<SetFunction> MakeBudgetAdditiveFunction(
    std::vector<double> values, double budget);

// Wraps an arbitrary evaluator as a custom-kind function.
SetFunction MakeCustomFunction(int n, SetFunction::Evaluator evaluator,
                               std::string name = "custom");

// All 2^n values in binary-counter order. Fails when n > limit.
absl::StatusOr<std::vector<double>> Tabulate(const SetFunction& f,
                                             int limit = 24);

}  // namespace submod

#endif  // SUBMOD_CORE_SET_FUNCTION_H_
