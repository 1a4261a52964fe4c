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

#include "submod/learners/linear_feasibility.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace submod {

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr int kRefactorEvery = 64;
constexpr int kStallBeforeBland = 40;
// Gauss-Jordan refactoring costs m^3; larger bases rely on the product-form
// updates alone.
constexpr int kRefactorMaxSize = 256;

// Revised simplex on the dual  max h^T y, G^T y + s = c, y, s >= 0.
// Column ids: [0, m) are the slacks s, m + j is constraint row j.
class DualSimplex {
 public:
  DualSimplex(const CoveringLp& lp, const LpOptions& options)
      : lp_(lp),
        opt_(options),
        m_(lp.num_vars),
        batch_(options.batch > 0 ? options.batch : std::max(16, 4 * m_)),
        in_working_(lp.rows.size(), 0),
        basis_(m_),
        binv_(static_cast<size_t>(m_) * m_, 0.0),
        xb_(lp.cost),
        pi_(m_, 0.0) {
    std::iota(basis_.begin(), basis_.end(), 0);
    for (int i = 0; i < m_; ++i) binv_[Index(i, i)] = 1.0;
  }

  absl::StatusOr<LpResult> Run() {
    LpResult out;
    int stall = 0;
    double last_objective = -1;
    while (true) {
      if (out.iterations >= opt_.max_iterations) {
        return absl::InternalError(absl::StrCat(
            "simplex hit the iteration limit ", opt_.max_iterations));
      }
      ComputePi();
      const bool bland = stall >= kStallBeforeBland;
      int entering = ChooseEntering(bland);
      if (entering < 0) {
        if (!AddViolatedRows()) break;
        continue;
      }
      ++out.iterations;
      std::vector<double> alpha = Ftran(entering);
      const int leave = RatioTest(alpha);
      if (leave < 0) {
        out.feasible = false;
        if (entering >= m_) out.conflict.push_back(entering - m_);
        for (int i = 0; i < m_; ++i) {
          if (alpha[i] < -kPivotTolerance && basis_[i] >= m_) {
            out.conflict.push_back(basis_[i] - m_);
          }
        }
        std::sort(out.conflict.begin(), out.conflict.end());
        return out;
      }
      Pivot(entering, leave, alpha);
      if (m_ <= kRefactorMaxSize && out.iterations % kRefactorEvery == 0) {
        if (auto s = Refactor(); !s.ok()) return s;
      }
      const double objective = Objective();
      if (objective > last_objective + opt_.tolerance) {
        stall = 0;
        last_objective = objective;
      } else {
        ++stall;
      }
    }
    if (m_ <= kRefactorMaxSize) {
      if (auto s = Refactor(); !s.ok()) return s;
    }
    ComputePi();
    out.feasible = true;
    out.x.resize(m_);
    for (int k = 0; k < m_; ++k) out.x[k] = std::max(0.0, pi_[k]);
    for (int k = 0; k < m_; ++k) out.objective += lp_.cost[k] * out.x[k];
    return out;
  }

 private:
  size_t Index(int r, int c) const { return static_cast<size_t>(r) * m_ + c; }

  double Cost(int col) const { return col < m_ ? 0.0 : lp_.rhs[col - m_]; }

  double Dot(int col, const std::vector<double>& v) const {
    if (col < m_) return v[col];
    const auto& row = lp_.rows[col - m_];
    double s = 0;
    for (int k = 0; k < m_; ++k) s += row[k] * v[k];
    return s;
  }

  double Reduced(int col) const { return Cost(col) - Dot(col, pi_); }

  double Threshold(int col) const {
    return opt_.tolerance * std::max(1.0, std::abs(Cost(col)));
  }

  void ComputePi() {
    std::fill(pi_.begin(), pi_.end(), 0.0);
    for (int i = 0; i < m_; ++i) {
      const double c = Cost(basis_[i]);
      if (c == 0) continue;
      for (int k = 0; k < m_; ++k) pi_[k] += c * binv_[Index(i, k)];
    }
  }

  double Objective() const {
    double s = 0;
    for (int i = 0; i < m_; ++i) s += Cost(basis_[i]) * xb_[i];
    return s;
  }

  int ChooseEntering(bool bland) const {
    int best = -1;
    double best_d = 0;
    auto consider = [&](int col) {
      const double d = Reduced(col);
      if (d <= Threshold(col)) return false;
      if (bland) {
        if (best < 0 || col < best) best = col;
        return false;
      }
      if (d > best_d) {
        best_d = d;
        best = col;
      }
      return false;
    };
    for (int i = 0; i < m_; ++i) consider(i);
    for (int j : working_) consider(m_ + j);
    return best;
  }

  // Full pricing over rows outside the working set. Returns false when none
  // has a positive reduced cost.
  bool AddViolatedRows() {
    std::vector<std::pair<double, int>> violated;
    for (size_t j = 0; j < lp_.rows.size(); ++j) {
      if (in_working_[j]) continue;
      const int col = m_ + static_cast<int>(j);
      const double d = Reduced(col);
      if (d > Threshold(col)) violated.emplace_back(-d, static_cast<int>(j));
    }
    if (violated.empty()) return false;
    const size_t take = std::min<size_t>(violated.size(), batch_);
    std::partial_sort(violated.begin(), violated.begin() + take, violated.end());
    for (size_t t = 0; t < take; ++t) {
      in_working_[violated[t].second] = 1;
      working_.push_back(violated[t].second);
    }
    return true;
  }

  std::vector<double> Ftran(int col) const {
    std::vector<double> alpha(m_, 0.0);
    if (col < m_) {
      for (int i = 0; i < m_; ++i) alpha[i] = binv_[Index(i, col)];
      return alpha;
    }
    const auto& row = lp_.rows[col - m_];
    for (int i = 0; i < m_; ++i) {
      double s = 0;
      for (int k = 0; k < m_; ++k) s += binv_[Index(i, k)] * row[k];
      alpha[i] = s;
    }
    return alpha;
  }

  int RatioTest(const std::vector<double>& alpha) const {
    int leave = -1;
    double best = 0;
    for (int i = 0; i < m_; ++i) {
      if (alpha[i] <= kPivotTolerance) continue;
      const double theta = std::max(0.0, xb_[i]) / alpha[i];
      if (leave < 0 || theta < best - 1e-12) {
        leave = i;
        best = theta;
      } else if (theta <= best + 1e-12 && basis_[i] < basis_[leave]) {
        leave = i;
        best = std::min(best, theta);
      }
    }
    return leave;
  }

  void Pivot(int entering, int leave, const std::vector<double>& alpha) {
    const double theta = std::max(0.0, xb_[leave]) / alpha[leave];
    for (int i = 0; i < m_; ++i) {
      if (i == leave) continue;
      xb_[i] = std::max(0.0, xb_[i] - theta * alpha[i]);
    }
    xb_[leave] = theta;
    const double inv = 1.0 / alpha[leave];
    for (int k = 0; k < m_; ++k) binv_[Index(leave, k)] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == leave || alpha[i] == 0) continue;
      const double f = alpha[i];
      for (int k = 0; k < m_; ++k) {
        binv_[Index(i, k)] -= f * binv_[Index(leave, k)];
      }
    }
    basis_[leave] = entering;
  }

  // Rebuilds B^{-1} by Gauss-Jordan elimination and recomputes x_B.
  absl::Status Refactor() {
    std::vector<double> a(static_cast<size_t>(m_) * 2 * m_, 0.0);
    auto at = [&](int r, int c) -> double& {
      return a[static_cast<size_t>(r) * 2 * m_ + c];
    };
    for (int i = 0; i < m_; ++i) {
      const int col = basis_[i];
      for (int r = 0; r < m_; ++r) {
        at(r, i) = col < m_ ? (r == col ? 1.0 : 0.0) : lp_.rows[col - m_][r];
      }
      at(i, m_ + i) = 1.0;
    }
    for (int c = 0; c < m_; ++c) {
      int p = c;
      for (int r = c + 1; r < m_; ++r) {
        if (std::abs(at(r, c)) > std::abs(at(p, c))) p = r;
      }
      if (std::abs(at(p, c)) < 1e-14) {
        return absl::InternalError("simplex basis became singular");
      }
      if (p != c) {
        for (int k = 0; k < 2 * m_; ++k) std::swap(at(p, k), at(c, k));
      }
      const double inv = 1.0 / at(c, c);
      for (int k = 0; k < 2 * m_; ++k) at(c, k) *= inv;
      for (int r = 0; r < m_; ++r) {
        if (r == c || at(r, c) == 0) continue;
        const double f = at(r, c);
        for (int k = 0; k < 2 * m_; ++k) at(r, k) -= f * at(c, k);
      }
    }
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) binv_[Index(i, k)] = at(i, m_ + k);
    }
    for (int i = 0; i < m_; ++i) {
      double s = 0;
      for (int k = 0; k < m_; ++k) s += binv_[Index(i, k)] * lp_.cost[k];
      xb_[i] = std::max(0.0, s);
    }
    return absl::OkStatus();
  }

  const CoveringLp& lp_;
  const LpOptions& opt_;
  const int m_;
  const int batch_;
  std::vector<char> in_working_;
  std::vector<int> working_;
  std::vector<int> basis_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  std::vector<double> pi_;
};

}  // namespace

absl::StatusOr<LpResult> SolveCoveringLp(const CoveringLp& lp,
                                         const LpOptions& options) {
  if (lp.num_vars < 1) return absl::InvalidArgumentError("LP needs a variable");
  if (static_cast<int>(lp.cost.size()) != lp.num_vars) {
    return absl::InvalidArgumentError("cost vector has the wrong size");
  }
  for (double c : lp.cost) {
    if (!(c >= 0) || !std::isfinite(c)) {
      return absl::InvalidArgumentError("costs must be finite and >= 0");
    }
  }
  if (lp.rows.size() != lp.rhs.size()) {
    return absl::InvalidArgumentError("rows and right-hand sides differ in count");
  }
  for (size_t j = 0; j < lp.rows.size(); ++j) {
    if (static_cast<int>(lp.rows[j].size()) != lp.num_vars ||
        !std::isfinite(lp.rhs[j])) {
      return absl::InvalidArgumentError(absl::StrCat("row ", j, " is malformed"));
    }
  }
  DualSimplex solver(lp, options);
  return solver.Run();
}

absl::StatusOr<FeasibilityResult> SolveLinearFeasibility(
    int n, const std::vector<LabeledPoint>& points,
    const ElementSet& zero_coords, double margin) {
  if (!(margin > 0)) return absl::InvalidArgumentError("margin must be > 0");
  if (zero_coords.ground_size() != n) {
    return absl::InvalidArgumentError("zero_coords has the wrong ground set");
  }
  // Variables: w on the free coordinates, then z. Rows are scaled by
  // 1 / (margin ||x||), so every right-hand side is 1.
  // Coordinates that occur in no point have all-zero columns and cost 1, so
  // they are 0 at the optimum and are left out of the LP.
  ElementSet used(n);
  for (const auto& p : points) {
    if (p.set.ground_size() == n) used |= p.set;
  }
  std::vector<int> var_of(n, -1);
  std::vector<int> free;
  for (int j = 0; j < n; ++j) {
    if (used.Contains(j) && !zero_coords.Contains(j)) {
      var_of[j] = static_cast<int>(free.size());
      free.push_back(j);
    }
  }
  const int zvar = static_cast<int>(free.size());
  CoveringLp lp;
  lp.num_vars = zvar + 1;
  lp.cost.assign(lp.num_vars, 1.0);
  lp.rows.reserve(points.size() + 1);
  std::vector<double> norms(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const LabeledPoint& p = points[i];
    if (p.set.ground_size() != n || (p.label != 1 && p.label != -1) ||
        !std::isfinite(p.last)) {
      return absl::InvalidArgumentError(absl::StrCat("point ", i, " is malformed"));
    }
    norms[i] = std::sqrt(p.set.Count() + p.last * p.last);
    std::vector<double> row(lp.num_vars, 0.0);
    const double s = norms[i] > 0 ? p.label / norms[i] : 0.0;
    p.set.ForEach([&](int j) {
      if (var_of[j] >= 0) row[var_of[j]] = s;
    });
    row[zvar] = -s * p.last;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(norms[i] > 0 ? 1.0 : 0.0);
  }
  std::vector<double> zrow(lp.num_vars, 0.0);
  zrow[zvar] = 1.0;
  lp.rows.push_back(std::move(zrow));
  lp.rhs.push_back(1.0);

  auto solved = SolveCoveringLp(lp);
  if (!solved.ok()) return solved.status();
  FeasibilityResult out;
  if (!solved->feasible) {
    for (int r : solved->conflict) {
      if (r < static_cast<int>(points.size())) out.conflict.push_back(r);
    }
    return out;
  }
  out.feasible = true;
  out.separator.w.assign(n, 0.0);
  for (int v = 0; v < zvar; ++v) out.separator.w[free[v]] = margin * solved->x[v];
  out.separator.z = margin * solved->x[zvar];
  // Independent re-check in the original coordinates.
  for (size_t i = 0; i < points.size(); ++i) {
    double dot = -out.separator.z * points[i].last;
    points[i].set.ForEach([&](int j) { dot += out.separator.w[j]; });
    if (points[i].label * dot < margin * norms[i] * (1 - 1e-6)) {
      return absl::InternalError(absl::StrCat(
          "separator misses point ", i, " by more than the solver tolerance"));
    }
  }
  if (out.separator.z < margin * (1 - 1e-6)) {
    return absl::InternalError("separator has z below the margin");
  }
  return out;
}

}  // namespace submod
