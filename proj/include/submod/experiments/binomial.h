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

#ifndef SUBMOD_EXPERIMENTS_BINOMIAL_H_
#define SUBMOD_EXPERIMENTS_BINOMIAL_H_

#include <vector>

namespace submod {

// Exact Bin(n, p) quantities by direct summation of the pmf (log-gamma
// form). These back every experiment on functions of |S| alone.
double BinomialPmf(int n, double p, int k);
std::vector<double> BinomialPmfs(int n, double p);
// Pr[X <= k] and Pr[X >= k].
double BinomialCdf(int n, double p, int k);
double BinomialUpperTail(int n, double p, int k);

// For f(S) = h(|S|) under R(p): E f, Pr[f <= x], Pr[f >= x], and
// Pr[|f - m| > r].
double ProfileMean(const std::vector<double>& h, double p);
double ProfileLowerTail(const std::vector<double>& h, double p, double x);
double ProfileUpperTail(const std::vector<double>& h, double p, double x);
double ProfileDeviation(const std::vector<double>& h, double p, double m,
                        double r);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENTS_BINOMIAL_H_
