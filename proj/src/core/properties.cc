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

#include "submod/core/properties.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "submod/core/parallel.h"
#include "submod/core/random.h"

namespace submod {
namespace {

enum Prop { kNormalized, kNonnegative, kMonotone, kMarginal, kLattice, kNum };

constexpr std::array<const char*, kNum> kPropNames = {
    "normalized", "nonnegative", "monotone", "submodular-marginal",
    "submodular-lattice"};

struct Partial {
  std::array<std::vector<PropertyWitness>, kNum> witnesses;
  std::array<bool, kNum> violated{};
  bool integer_valued = true;
  double lipschitz = 0;
  int64_t checks = 0;

  void Add(Prop p, int n, uint64_t s, uint64_t t, int x, double lhs,
           double rhs, int cap) {
    violated[p] = true;
    if (static_cast<int>(witnesses[p].size()) < cap) {
      witnesses[p].push_back(PropertyWitness{
          kPropNames[p], ElementSet::FromMask(n, s), ElementSet::FromMask(n, t),
          x, lhs, rhs});
    }
  }
  void AddSets(Prop p, const ElementSet& s, const ElementSet& t, int x,
               double lhs, double rhs, int cap) {
    violated[p] = true;
    if (static_cast<int>(witnesses[p].size()) < cap) {
      witnesses[p].push_back(PropertyWitness{kPropNames[p], s, t, x, lhs, rhs});
    }
  }
  void Merge(const Partial& o, int cap) {
    for (int p = 0; p < kNum; ++p) {
      violated[p] = violated[p] || o.violated[p];
      for (const auto& w : o.witnesses[p]) {
        if (static_cast<int>(witnesses[p].size()) >= cap) break;
        witnesses[p].push_back(w);
      }
    }
    integer_valued = integer_valued && o.integer_valued;
    lipschitz = std::max(lipschitz, o.lipschitz);
    checks += o.checks;
  }
};

PropertyReport Finish(int n, bool exhaustive, bool lattice_exhaustive,
                      const Partial& acc, int cap) {
  PropertyReport r;
  r.ground_size = n;
  r.exhaustive = exhaustive;
  r.lattice_exhaustive = lattice_exhaustive;
  r.normalized = !acc.violated[kNormalized];
  r.nonnegative = !acc.violated[kNonnegative];
  r.monotone = !acc.violated[kMonotone];
  r.submodular_marginal = !acc.violated[kMarginal];
  r.submodular_lattice = !acc.violated[kLattice];
  r.submodular = r.submodular_marginal && r.submodular_lattice;
  r.integer_valued = acc.integer_valued;
  r.lipschitz_constant = acc.lipschitz;
  r.checks = acc.checks;
  // One witness per failing property first, then fill up to the cap.
  for (int p = 0; p < kNum; ++p) {
    if (!acc.witnesses[p].empty() && static_cast<int>(r.witnesses.size()) < cap) {
      r.witnesses.push_back(acc.witnesses[p].front());
    }
  }
  for (int p = 0; p < kNum; ++p) {
    for (size_t i = 1; i < acc.witnesses[p].size(); ++i) {
      if (static_cast<int>(r.witnesses.size()) >= cap) break;
      r.witnesses.push_back(acc.witnesses[p][i]);
    }
  }
  return r;
}

double Tolerance(const std::vector<double>& v, double rel) {
  double scale = 1;
  for (double x : v) scale = std::max(scale, std::fabs(x));
  return rel * scale;
}

bool IsInteger(double v) { return std::fabs(v - std::round(v)) <= 1e-9; }

}  // namespace

absl::StatusOr<PropertyReport> CheckProperties(
    const SetFunction& f, const PropertyCheckOptions& options) {
  const int n = f.ground_size();
  if (n > options.exhaustive_limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "exhaustive property check refused: ground size ", n,
        " exceeds limit ", options.exhaustive_limit));
  }
  auto table = Tabulate(f, options.exhaustive_limit);
  if (!table.ok()) return table.status();
  const std::vector<double>& v = *table;
  const double tol = Tolerance(v, options.tolerance);
  const int cap = options.max_witnesses;
  const uint64_t full = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  const int64_t size = static_cast<int64_t>(v.size());

  Partial acc;
  if (std::fabs(v[0]) > tol) acc.Add(kNormalized, n, 0, 0, -1, v[0], 0, cap);

  const int chunks = DefaultChunks(size);
  std::vector<Partial> parts(chunks);
  ParallelChunks(size, chunks, [&](int c, int64_t begin, int64_t end) {
    Partial& p = parts[c];
    for (int64_t ti = begin; ti < end; ++ti) {
      const uint64_t t = static_cast<uint64_t>(ti);
      const double ft = v[t];
      if (ft < -tol) p.Add(kNonnegative, n, t, t, -1, ft, 0, cap);
      if (!IsInteger(ft)) p.integer_valued = false;
      const uint64_t comp = full & ~t;
      for (uint64_t rest = comp; rest != 0; rest &= rest - 1) {
        const int x = __builtin_ctzll(rest);
        const uint64_t bx = uint64_t{1} << x;
        const double gain_t = v[t | bx] - ft;
        p.lipschitz = std::max(p.lipschitz, std::fabs(gain_t));
        if (gain_t < -tol) p.Add(kMonotone, n, t, t | bx, x, v[t | bx], ft, cap);
      }
      // Marginal form over all S ⊆ T in increasing order, then x ascending.
      uint64_t s = 0;
      while (true) {
        const double fs = v[s];
        for (uint64_t rest = comp; rest != 0; rest &= rest - 1) {
          const int x = __builtin_ctzll(rest);
          const uint64_t bx = uint64_t{1} << x;
          const double lhs = v[t | bx] - ft;
          const double rhs = v[s | bx] - fs;
          ++p.checks;
          if (lhs > rhs + tol) p.Add(kMarginal, n, s, t, x, lhs, rhs, cap);
        }
        if (s == t) break;
        s = (s - t) & t;
      }
    }
  });
  for (const auto& p : parts) acc.Merge(p, cap);

  const bool lattice_exhaustive = n <= options.lattice_exhaustive_limit;
  if (lattice_exhaustive) {
    std::vector<Partial> lparts(chunks);
    ParallelChunks(size, chunks, [&](int c, int64_t begin, int64_t end) {
      Partial& p = lparts[c];
      for (int64_t si = begin; si < end; ++si) {
        const uint64_t s = static_cast<uint64_t>(si);
        for (uint64_t t = s + 1; t < static_cast<uint64_t>(size); ++t) {
          const double lhs = v[s] + v[t];
          const double rhs = v[s | t] + v[s & t];
          ++p.checks;
          if (lhs < rhs - tol) p.Add(kLattice, n, s, t, -1, lhs, rhs, cap);
        }
      }
    });
    for (const auto& p : lparts) acc.Merge(p, cap);
  } else {
    Rng rng(options.seed, 0x1a771ce);
    for (int64_t i = 0; i < options.lattice_samples; ++i) {
      const uint64_t s = rng.Next() & full;
      const uint64_t t = rng.Next() & full;
      const double lhs = v[s] + v[t];
      const double rhs = v[s | t] + v[s & t];
      ++acc.checks;
      if (lhs < rhs - tol) acc.Add(kLattice, n, s, t, -1, lhs, rhs, cap);
    }
  }
  return Finish(n, true, lattice_exhaustive, acc, cap);
}

PropertyReport CheckPropertiesSampled(const SetFunction& f, int64_t trials,
                                      uint64_t seed,
                                      const PropertyCheckOptions& options) {
  const int n = f.ground_size();
  const int cap = options.max_witnesses;
  const double rel = options.tolerance;
  auto tol_of = [rel](double a, double b) {
    return rel * std::max({1.0, std::fabs(a), std::fabs(b)});
  };
  Partial acc;
  const ElementSet empty(n);
  const double f_empty = f(empty);
  if (std::fabs(f_empty) > tol_of(f_empty, 0)) {
    acc.AddSets(kNormalized, empty, empty, -1, f_empty, 0, cap);
  }
  Rng rng(seed, 0x5a3b1e);
  for (int64_t trial = 0; trial < trials; ++trial) {
    // Marginal form: element in S∩T, in T only, or outside T.
    ElementSet s(n), t(n);
    for (int e = 0; e < n; ++e) {
      const int c = rng.UniformInt(3);
      if (c == 0) {
        s.Insert(e);
        t.Insert(e);
      } else if (c == 1) {
        t.Insert(e);
      }
    }
    const double fs = f(s), ft = f(t);
    for (double val : {fs, ft}) {
      if (!IsInteger(val)) acc.integer_valued = false;
    }
    if (fs < -tol_of(fs, 0)) acc.AddSets(kNonnegative, s, s, -1, fs, 0, cap);
    if (ft < -tol_of(ft, 0)) acc.AddSets(kNonnegative, t, t, -1, ft, 0, cap);
    const int outside = n - t.Count();
    if (outside > 0) {
      int pick = rng.UniformInt(outside);
      int x = -1;
      for (int e = 0; e < n; ++e) {
        if (!t.Contains(e) && pick-- == 0) {
          x = e;
          break;
        }
      }
      const double fsx = f(s.With(x)), ftx = f(t.With(x));
      const double lhs = ftx - ft, rhs = fsx - fs;
      acc.lipschitz = std::max({acc.lipschitz, std::fabs(lhs), std::fabs(rhs)});
      if (lhs < -tol_of(ftx, ft)) {
        acc.AddSets(kMonotone, t, t.With(x), x, ftx, ft, cap);
      }
      if (rhs < -tol_of(fsx, fs)) {
        acc.AddSets(kMonotone, s, s.With(x), x, fsx, fs, cap);
      }
      ++acc.checks;
      if (lhs > rhs + tol_of(ftx, fsx)) {
        acc.AddSets(kMarginal, s, t, x, lhs, rhs, cap);
      }
    }
    // Lattice form: element in both, S only, T only, or neither.
    ElementSet a(n), b(n);
    for (int e = 0; e < n; ++e) {
      const int c = rng.UniformInt(4);
      if (c == 0 || c == 1) a.Insert(e);
      if (c == 0 || c == 2) b.Insert(e);
    }
    const double fa = f(a), fb = f(b);
    const double fu = f(a | b), fi = f(a & b);
    ++acc.checks;
    if (fa + fb < fu + fi - tol_of(fa + fb, fu + fi)) {
      acc.AddSets(kLattice, a, b, -1, fa + fb, fu + fi, cap);
    }
  }
  return Finish(n, false, false, acc, cap);
}

absl::StatusOr<MinimizerLattice> CheckMinimizerLattice(
    const SetFunction& f, const PropertyCheckOptions& options) {
  auto report = CheckProperties(f, options);
  if (!report.ok()) return report.status();
  if (!report->submodular) {
    return absl::FailedPreconditionError(
        "minimizer lattice check requires a submodular function");
  }
  auto table = Tabulate(f, options.exhaustive_limit);
  if (!table.ok()) return table.status();
  const std::vector<double>& v = *table;
  const double tol = Tolerance(v, options.tolerance);
  const int n = f.ground_size();

  MinimizerLattice out;
  out.min_value = *std::min_element(v.begin(), v.end());
  std::vector<bool> is_min(v.size());
  std::vector<uint64_t> minimizers;
  for (uint64_t m = 0; m < v.size(); ++m) {
    if (v[m] <= out.min_value + tol) {
      is_min[m] = true;
      minimizers.push_back(m);
    }
  }
  out.num_minimizers = static_cast<int64_t>(minimizers.size());
  const double pairs = 0.5 * static_cast<double>(minimizers.size()) *
                       static_cast<double>(minimizers.size());
  if (pairs > static_cast<double>(int64_t{1} << 31)) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "minimizer lattice check refused: ", minimizers.size(),
        " minimizers give too many pairs"));
  }
  for (size_t i = 0; i < minimizers.size() && out.closed; ++i) {
    for (size_t j = i + 1; j < minimizers.size(); ++j) {
      const uint64_t a = minimizers[i], b = minimizers[j];
      if (!is_min[a | b] || !is_min[a & b]) {
        out.closed = false;
        out.counterexample.emplace(ElementSet::FromMask(n, a),
                                   ElementSet::FromMask(n, b));
        break;
      }
    }
  }
  return out;
}

}  // namespace submod
