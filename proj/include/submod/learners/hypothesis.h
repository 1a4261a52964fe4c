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

#ifndef SUBMOD_LEARNERS_HYPOTHESIS_H_
#define SUBMOD_LEARNERS_HYPOTHESIS_H_

#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "submod/core/element_set.h"

namespace submod {

enum class HypothesisKind { kConstant, kNullSubcube, kSqrtLinear };

std::string_view HypothesisKindName(HypothesisKind kind);

// Output of a learner. Only the fields of the active kind are meaningful.
//   constant:     c
//   null-subcube: low on subsets of U, high elsewhere
//   sqrt-linear:  (Σ_{j∈S} w_j / (scale · z))^{1/2}, w_j = 0 on zero_coords
// For the plain sqrt-linear learner scale = n + 1; the robust variant uses
// α²(n + 1).
class Hypothesis {
 public:
  static absl::StatusOr<Hypothesis> Constant(int n, double c);
  static Hypothesis NullSubcube(ElementSet U, double low, double high);
  static absl::StatusOr<Hypothesis> SqrtLinear(std::vector<double> w, double z,
                                               ElementSet zero_coords,
                                               double scale);

  HypothesisKind kind() const { return kind_; }
  int n() const { return n_; }
  double Evaluate(const ElementSet& S) const;
  double operator()(const ElementSet& S) const { return Evaluate(S); }

  double c() const { return c_; }
  const ElementSet& U() const { return U_; }
  double low() const { return low_; }
  double high() const { return high_; }
  const std::vector<double>& w() const { return w_; }
  double z() const { return z_; }
  double scale() const { return scale_; }
  const ElementSet& zero_coords() const { return U_; }

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;

 private:
  Hypothesis(HypothesisKind kind, int n) : kind_(kind), n_(n), U_(n) {}

  HypothesisKind kind_;
  int n_;
  double c_ = 0;
  ElementSet U_;  // null-subcube U, or sqrt-linear zero coordinates
  double low_ = 0;
  double high_ = 0;
  std::vector<double> w_;
  double z_ = 0;
  double scale_ = 0;
};

// {"kind": "constant"|"null-subcube"|"sqrt-linear", "n": int, ...}
nlohmann::json HypothesisToJson(const Hypothesis& h);
absl::StatusOr<Hypothesis> HypothesisFromJson(const nlohmann::json& j);

}  // namespace submod

#endif  // SUBMOD_LEARNERS_HYPOTHESIS_H_
