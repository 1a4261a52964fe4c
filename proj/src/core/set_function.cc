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

#include "submod/core/set_function.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace submod {

std::string_view FunctionKindName(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kCoverage:
      return "coverage";
    case FunctionKind::kCut:
      return "cut";
    case FunctionKind::kMatroidRank:
      return "matroid-rank";
    case FunctionKind::kTabulated:
      return "tabulated";
    case FunctionKind::kCardinalityProfile:
      return "cardinality-profile";
    case FunctionKind::kCustom:
      return "custom";
  }
  return "unknown";
}

SetFunction::SetFunction(int ground_size, FunctionKind kind,
                         Evaluator evaluator, ExactEvaluator exact,
                         std::string name)
    : ground_size_(ground_size),
      kind_(kind),
      evaluator_(std::make_shared<const Evaluator>(std::move(evaluator))),
      exact_(exact ? std::make_shared<const ExactEvaluator>(std::move(exact))
                   : nullptr),
      name_(name.empty() ? std::string(FunctionKindName(kind))
                         : std::move(name)) {}

SetFunction SetFunction::WithName(std::string name) const {
  SetFunction copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

absl::StatusOr<SetFunction> MakeCoverageFunction(
    int universe_size, std::vector<ElementSet> subsets,
    std::optional<std::vector<double>> weights) {
  for (size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i].ground_size() != universe_size) {
      return absl::InvalidArgumentError(absl::StrCat(
          "subset ", i, " is over a universe of size ",
          subsets[i].ground_size(), ", expected ", universe_size));
    }
  }
  if (weights.has_value()) {
    if (static_cast<int>(weights->size()) != universe_size) {
      return absl::InvalidArgumentError(
          absl::StrCat("expected ", universe_size, " weights, got ",
                       weights->size()));
    }
    for (double w : *weights) {
      if (!(w >= 0) || !std::isfinite(w)) {
        return absl::InvalidArgumentError(
            absl::StrCat("weight ", w, " is not a finite nonnegative real"));
      }
    }
  }
  const int n = static_cast<int>(subsets.size());
  auto shared = std::make_shared<const std::vector<ElementSet>>(
      std::move(subsets));
  auto cover = [shared, universe_size](const ElementSet& s) {
    ElementSet u(universe_size);
    s.ForEach([&](int i) { u |= (*shared)[i]; });
    return u;
  };
  if (!weights.has_value()) {
    auto exact = [cover](const ElementSet& s) -> int64_t {
      return cover(s).Count();
    };
    return SetFunction(
        n, FunctionKind::kCoverage,
        [exact](const ElementSet& s) { return static_cast<double>(exact(s)); },
        exact);
  }
  auto w = std::make_shared<const std::vector<double>>(std::move(*weights));
  return SetFunction(n, FunctionKind::kCoverage,
                     [cover, w](const ElementSet& s) {
                       double total = 0;
                       cover(s).ForEach([&](int e) { total += (*w)[e]; });
                       return total;
                     });
}

absl::StatusOr<SetFunction> MakeCutFunction(
    int n, const std::vector<std::pair<int, int>>& edges) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", u, ",", v, ") outside vertex set [", n, "]"));
    }
    if (u == v) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop at vertex ", u));
    }
  }
  auto shared = std::make_shared<const std::vector<std::pair<int, int>>>(edges);
  auto exact = [shared](const ElementSet& s) -> int64_t {
    int64_t cut = 0;
    for (const auto& [u, v] : *shared) cut += s.Contains(u) != s.Contains(v);
    return cut;
  };
  return SetFunction(
      n, FunctionKind::kCut,
      [exact](const ElementSet& s) { return static_cast<double>(exact(s)); },
      exact);
}

absl::StatusOr<SetFunction> MakeCardinalityProfile(std::vector<double> h) {
  if (h.empty()) {
    return absl::InvalidArgumentError("profile needs n+1 >= 1 values");
  }
  for (double v : h) {
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError("profile values must be finite");
    }
  }
  const int n = static_cast<int>(h.size()) - 1;
  const bool integral = std::all_of(h.begin(), h.end(), [](double v) {
    return v == std::floor(v) && std::fabs(v) < 9e15;
  });
  auto shared = std::make_shared<const std::vector<double>>(std::move(h));
  SetFunction::ExactEvaluator exact = nullptr;
  if (integral) {
    exact = [shared](const ElementSet& s) {
      return static_cast<int64_t>((*shared)[s.Count()]);
    };
  }
  return SetFunction(
      n, FunctionKind::kCardinalityProfile,
      [shared](const ElementSet& s) { return (*shared)[s.Count()]; }, exact);
}

absl::StatusOr<SetFunction> MakeTabulatedFunction(int n,
                                                  std::vector<double> values) {
  if (n < 0 || n > 30) {
    return absl::InvalidArgumentError(
        absl::StrCat("tabulated ground size ", n, " outside [0, 30]"));
  }
  if (values.size() != (size_t{1} << n)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected 2^", n, " = ", size_t{1} << n, " values, got ",
        values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError("tabulated values must be finite");
    }
  }
  auto shared = std::make_shared<const std::vector<double>>(std::move(values));
  return SetFunction(n, FunctionKind::kTabulated,
                     [shared](const ElementSet& s) {
                       return (*shared)[s.ToMask()];
                     });
}

absl::StatusOr<SetFunction> MakeAdditiveFunction(std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError("additive values must be finite");
    }
  }
  const int n = static_cast<int>(values.size());
  auto shared = std::make_shared<const std::vector<double>>(std::move(values));
  return SetFunction(
      n, FunctionKind::kCustom,
      [shared](const ElementSet& s) {
        double total = 0;
        s.ForEach([&](int e) { total += (*shared)[e]; });
        return total;
      },
      nullptr, "additive");
}

absl::StatusOr<SetFunction> MakeBudgetAdditiveFunction(
    std::vector<double> values, double budget) {
  if (!std::isfinite(budget)) {
    return absl::InvalidArgumentError("budget must be finite");
  }
  auto additive = MakeAdditiveFunction(std::move(values));
  if (!additive.ok()) return additive.status();
  SetFunction inner = *std::move(additive);
  return SetFunction(
      inner.ground_size(), FunctionKind::kCustom,
      [inner, budget](const ElementSet& s) {
        return std::min(budget, inner(s));
      },
      nullptr, "budget-additive");
}

SetFunction MakeCustomFunction(int n, SetFunction::Evaluator evaluator,
                               std::string name) {
  return SetFunction(n, FunctionKind::kCustom, std::move(evaluator), nullptr,
                     std::move(name));
}

absl::StatusOr<std::vector<double>> Tabulate(const SetFunction& f,
                                             int limit) {
  const int n = f.ground_size();
  if (n > limit || n > 30) {
    return absl::ResourceExhaustedError(
        absl::StrCat("ground size ", n, " exceeds tabulation limit ",
                     std::min(limit, 30)));
  }
  std::vector<double> values(size_t{1} << n);
  for (uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = f(ElementSet::FromMask(n, mask));
  }
  return values;
}

}  // namespace submod
