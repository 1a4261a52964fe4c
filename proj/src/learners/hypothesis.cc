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

#include "submod/learners/hypothesis.h"

#include <cmath>
#include <set>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/function_io.h"

namespace submod {

using nlohmann::json;

std::string_view HypothesisKindName(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::kConstant:
      return "constant";
    case HypothesisKind::kNullSubcube:
      return "null-subcube";
    case HypothesisKind::kSqrtLinear:
      return "sqrt-linear";
  }
  return "unknown";
}

absl::StatusOr<Hypothesis> Hypothesis::Constant(int n, double c) {
  if (!(c > 0) || !std::isfinite(c)) {
    return absl::InvalidArgumentError("constant hypothesis needs c > 0");
  }
  Hypothesis h(HypothesisKind::kConstant, n);
  h.c_ = c;
  return h;
}

Hypothesis Hypothesis::NullSubcube(ElementSet U, double low, double high) {
  Hypothesis h(HypothesisKind::kNullSubcube, U.ground_size());
  h.U_ = std::move(U);
  h.low_ = low;
  h.high_ = high;
  return h;
}

absl::StatusOr<Hypothesis> Hypothesis::SqrtLinear(std::vector<double> w,
                                                  double z,
                                                  ElementSet zero_coords,
                                                  double scale) {
  const int n = static_cast<int>(w.size());
  if (zero_coords.ground_size() != n) {
    return absl::InvalidArgumentError("zero_coords has the wrong ground set");
  }
  if (!(z > 0) || !(scale > 0)) {
    return absl::InvalidArgumentError("sqrt-linear hypothesis needs z, scale > 0");
  }
  for (int j = 0; j < n; ++j) {
    if (!(w[j] >= 0) || !std::isfinite(w[j])) {
      return absl::InvalidArgumentError(absl::StrCat("w[", j, "] is not >= 0"));
    }
    if (zero_coords.Contains(j) && w[j] != 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("w[", j, "] must be 0 on a zero coordinate"));
    }
  }
  Hypothesis h(HypothesisKind::kSqrtLinear, n);
  h.w_ = std::move(w);
  h.z_ = z;
  h.U_ = std::move(zero_coords);
  h.scale_ = scale;
  return h;
}

double Hypothesis::Evaluate(const ElementSet& S) const {
  switch (kind_) {
    case HypothesisKind::kConstant:
      return c_;
    case HypothesisKind::kNullSubcube:
      return S.IsSubsetOf(U_) ? low_ : high_;
    case HypothesisKind::kSqrtLinear: {
      double s = 0;
      S.ForEach([&](int j) { s += w_[j]; });
      return std::sqrt(s / (scale_ * z_));
    }
  }
  return 0;
}

json HypothesisToJson(const Hypothesis& h) {
  json j;
  j["kind"] = std::string(HypothesisKindName(h.kind()));
  j["n"] = h.n();
  switch (h.kind()) {
    case HypothesisKind::kConstant:
      j["c"] = h.c();
      break;
    case HypothesisKind::kNullSubcube:
      j["U"] = SetToJson(h.U());
      j["low"] = h.low();
      j["high"] = h.high();
      break;
    case HypothesisKind::kSqrtLinear:
      j["w"] = h.w();
      j["z"] = h.z();
      j["zero_coords"] = SetToJson(h.zero_coords());
      j["scale"] = h.scale();
      break;
  }
  return j;
}

absl::StatusOr<Hypothesis> HypothesisFromJson(const json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("hypothesis must be an object");
  static const std::set<std::string> kKeys = {"kind", "n",  "c", "U",
                                              "low",  "high", "w", "z",
                                              "zero_coords", "scale"};
  for (const auto& [key, unused] : j.items()) {
    if (!kKeys.count(key)) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown key '", key, "' in hypothesis"));
    }
  }
  auto number = [&](const char* key) -> absl::StatusOr<double> {
    if (!j.contains(key) || !j[key].is_number()) {
      return absl::InvalidArgumentError(
          absl::StrCat("key '", key, "' missing or not a number"));
    }
    return j[key].get<double>();
  };
  if (!j.contains("kind") || !j["kind"].is_string()) {
    return absl::InvalidArgumentError("key 'kind' missing or not a string");
  }
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 0) {
    return absl::InvalidArgumentError("key 'n' missing or not a count");
  }
  const int n = j["n"].get<int>();
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "constant") {
    auto c = number("c");
    if (!c.ok()) return c.status();
    return Hypothesis::Constant(n, *c);
  }
  if (kind == "null-subcube") {
    if (!j.contains("U")) return absl::InvalidArgumentError("key 'U' missing");
    auto U = SetFromJson(n, j["U"]);
    if (!U.ok()) return U.status();
    auto low = number("low");
    if (!low.ok()) return low.status();
    auto high = number("high");
    if (!high.ok()) return high.status();
    return Hypothesis::NullSubcube(*std::move(U), *low, *high);
  }
  if (kind == "sqrt-linear") {
    if (!j.contains("w") || !j["w"].is_array()) {
      return absl::InvalidArgumentError("key 'w' missing or not an array");
    }
    std::vector<double> w;
    for (const auto& x : j["w"]) {
      if (!x.is_number()) return absl::InvalidArgumentError("key 'w' has a non-number");
      w.push_back(x.get<double>());
    }
    if (static_cast<int>(w.size()) != n) {
      return absl::InvalidArgumentError("key 'w' must have n entries");
    }
    if (!j.contains("zero_coords")) {
      return absl::InvalidArgumentError("key 'zero_coords' missing");
    }
    auto zero = SetFromJson(n, j["zero_coords"]);
    if (!zero.ok()) return zero.status();
    auto z = number("z");
    if (!z.ok()) return z.status();
    auto scale = number("scale");
    if (!scale.ok()) return scale.status();
    return Hypothesis::SqrtLinear(std::move(w), *z, *std::move(zero), *scale);
  }
  return absl::InvalidArgumentError(
      absl::StrCat("key 'kind' has unknown value '", kind, "'"));
}

}  // namespace submod
