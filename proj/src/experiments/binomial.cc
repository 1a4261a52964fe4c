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

#include "submod/experiments/binomial.h"

#include <algorithm>
#include <cmath>

namespace submod {

double BinomialPmf(int n, double p, int k) {
  if (k < 0 || k > n) return 0;
  if (p <= 0) return k == 0 ? 1 : 0;
  if (p >= 1) return k == n ? 1 : 0;
  const double log_pmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                         std::lgamma(n - k + 1.0) + k * std::log(p) +
                         (n - k) * std::log1p(-p);
  return std::exp(log_pmf);
}

std::vector<double> BinomialPmfs(int n, double p) {
  std::vector<double> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = BinomialPmf(n, p, k);
  return out;
}

double BinomialCdf(int n, double p, int k) {
  if (k < 0) return 0;
  if (k >= n) return 1;
  double s = 0;
  for (int j = 0; j <= k; ++j) s += BinomialPmf(n, p, j);
  return std::min(1.0, s);
}

double BinomialUpperTail(int n, double p, int k) {
  if (k <= 0) return 1;
  if (k > n) return 0;
  double s = 0;
  for (int j = k; j <= n; ++j) s += BinomialPmf(n, p, j);
  return std::min(1.0, s);
}

namespace {

template <typename Pred>
double ProfileMass(const std::vector<double>& h, double p, Pred pred) {
  const int n = static_cast<int>(h.size()) - 1;
  double s = 0;
  for (int k = 0; k <= n; ++k) {
    if (pred(h[k])) s += BinomialPmf(n, p, k);
  }
  return std::min(1.0, s);
}

}  // namespace

double ProfileMean(const std::vector<double>& h, double p) {
  const int n = static_cast<int>(h.size()) - 1;
  double s = 0;
  for (int k = 0; k <= n; ++k) s += h[k] * BinomialPmf(n, p, k);
  return s;
}

double ProfileLowerTail(const std::vector<double>& h, double p, double x) {
  return ProfileMass(h, p, [x](double v) { return v <= x; });
}

double ProfileUpperTail(const std::vector<double>& h, double p, double x) {
  return ProfileMass(h, p, [x](double v) { return v >= x; });
}

double ProfileDeviation(const std::vector<double>& h, double p, double m,
                        double r) {
  return ProfileMass(h, p, [m, r](double v) { return std::abs(v - m) > r; });
}

}  // namespace submod
