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

#ifndef SUBMOD_EXPERIMENTS_CHARACTERIZATION_H_
#define SUBMOD_EXPERIMENTS_CHARACTERIZATION_H_

#include <cstdint>
#include <vector>

#include "submod/core/set_function.h"

namespace submod {

struct CharacterizationOptions {
  int64_t samples_per_k = 2000;
  double epsilon = 0.1;
  // Band: h[k] / (c_low ln(1/ε)) <= f(S(k)) <= c_high ln(1/ε) h[k].
  double c_low = 400;
  double c_high = 2000;
  int max_thresholds = 32;
};

// Draws are coupled: trial t draws u ∈ [0,1]^n once, and for every k uses
// R(k/n) = {i : u_i < k/n} and S(k) = the k smallest coordinates of u.
struct CharacterizationCurve {
  int n = 0;
  int64_t samples_per_k = 0;
  double epsilon = 0;
  double lower_factor = 0;  // c_low ln(1/ε)
  double upper_factor = 0;  // c_high ln(1/ε)
  std::vector<double> h_hat;     // h_hat[k] ≈ E f(R(k/n)), k = 0..n
  std::vector<double> h_se;
  std::vector<double> coverage;  // per k; coverage[0] = 1 by convention
  double min_coverage = 1;
  // Smallest constants (in units of ln(1/ε)) that would have covered every
  // draw: max h/f and max f/h over non-empty S(k).
  double needed_c_low = 0;
  double needed_c_high = 0;
  // Coupled second differences of h_hat with their standard errors, k=1..n-1.
  std::vector<double> second_diff;
  std::vector<double> second_diff_se;
  double max_second_excess = 0;  // max of Δ² - 3 se, clamped below at -inf
  bool concave_ok = true;
  // Threshold surrogates, over up to max_thresholds values of τ:
  // Pr[f(S(k)) > τ] non-decreasing in k, and Pr[f(S(k)) > τ] <=
  // 2 Pr[f(R(k/n)) > τ], each up to 3 standard errors.
  std::vector<double> thresholds;
  int monotone_violations = 0;
  int poisson_violations = 0;
};

CharacterizationCurve CharacterizationCurveFor(
    const SetFunction& f, uint64_t seed, const CharacterizationOptions& options = {});

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_CHARACTERIZATION_H_
