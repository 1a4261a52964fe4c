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

#include "submod/matroids/constraint_family.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace submod {

absl::StatusOr<ConstraintFamily> MakeConstraintFamily(
    int n, std::vector<ElementSet> sets, std::vector<int64_t> caps) {
  if (n < 0) return absl::InvalidArgumentError("ground size must be >= 0");
  if (sets.size() != caps.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        sets.size(), " sets but ", caps.size(), " capacities"));
  }
  for (size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].ground_size() != n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "set ", i, " is over ground size ", sets[i].ground_size(),
          ", expected ", n));
    }
    if (caps[i] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("capacity ", i, " is negative"));
    }
  }
  return ConstraintFamily{n, std::move(sets), std::move(caps)};
}

absl::StatusOr<ConstraintFamily> MakeUniformFamily(int n,
                                                   std::vector<ElementSet> sets,
                                                   int64_t b) {
  std::vector<int64_t> caps(sets.size(), b);
  return MakeConstraintFamily(n, std::move(sets), std::move(caps));
}

ElementSet UnionOf(const ConstraintFamily& family, const std::vector<int>& J) {
  ElementSet u(family.n);
  for (int j : J) u |= family.sets[j];
  return u;
}

int64_t GValue(const ConstraintFamily& family, const std::vector<int>& J) {
  int64_t caps = 0, sizes = 0;
  for (int j : J) {
    caps += family.caps[j];
    sizes += family.sets[j].Count();
  }
  return caps - (sizes - UnionOf(family, J).Count());
}

int64_t CountSubfamilies(int k, int max_size) {
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t total = 0;
  double binom = 1;
  for (int j = 1; j <= std::min(k, max_size); ++j) {
    binom = binom * (k - j + 1) / j;
    if (binom + static_cast<double>(total) > 9e18) return kMax;
    total += static_cast<int64_t>(std::llround(binom));
  }
  return total;
}

namespace {

struct Walker {
  const ConstraintFamily& family;
  const std::vector<int>& indices;
  int max_size;
  const std::function<bool(const SubfamilyView&)>& visit;
  std::vector<int> current;
  std::vector<ElementSet> unions;
  std::vector<int64_t> sizes;
  std::vector<int64_t> caps;

  // Returns false once the visitor asks to stop.
  bool Walk(size_t next) {
    for (size_t p = next; p < indices.size(); ++p) {
      const int j = indices[p];
      current.push_back(j);
      if (unions.empty()) {
        unions.push_back(family.sets[j]);
        sizes.push_back(family.sets[j].Count());
        caps.push_back(family.caps[j]);
      } else {
        unions.push_back(unions.back() | family.sets[j]);
        sizes.push_back(sizes.back() + family.sets[j].Count());
        caps.push_back(caps.back() + family.caps[j]);
      }
      const int64_t g = caps.back() - (sizes.back() - unions.back().Count());
      bool keep_going = visit(SubfamilyView{current, unions.back(), g});
      if (keep_going && static_cast<int>(current.size()) < max_size) {
        keep_going = Walk(p + 1);
      }
      current.pop_back();
      unions.pop_back();
      sizes.pop_back();
      caps.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

absl::Status EnumerateSubfamilies(
    const ConstraintFamily& family, const std::vector<int>& indices,
    int max_size, int64_t budget,
    const std::function<bool(const SubfamilyView&)>& visit) {
  const int64_t count =
      CountSubfamilies(static_cast<int>(indices.size()), max_size);
  if (count > budget) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "sub-family enumeration refused: ", count, " sets exceed budget ",
        budget));
  }
  if (max_size < 1) return absl::OkStatus();
  Walker w{family, indices, max_size, visit, {}, {}, {}, {}};
  // Unions are referenced by the visitor; keep them from reallocating.
  w.unions.reserve(max_size + 1);
  w.Walk(0);
  return absl::OkStatus();
}

absl::StatusOr<LargenessResult> IsDtauLarge(const ConstraintFamily& family,
                                            int64_t d, int tau, int64_t budget,
                                            const std::vector<int>* indices) {
  if (tau < 1) return absl::InvalidArgumentError("τ must be >= 1");
  if (d < 0) return absl::InvalidArgumentError("d must be >= 0");
  std::vector<int> all;
  if (indices == nullptr) {
    all.resize(family.k());
    std::iota(all.begin(), all.end(), 0);
    indices = &all;
  }
  const int max_size = std::max(tau - 1, 2 * tau - 2);
  LargenessResult out;
  // g(∅) = 0 always satisfies the |J| < τ condition.
  auto status = EnumerateSubfamilies(
      family, *indices, max_size, budget, [&](const SubfamilyView& v) {
        ++out.sets_checked;
        const int size = static_cast<int>(v.J.size());
        const int64_t need = size < tau ? 0 : d;
        if (v.g < need) {
          out.large = false;
          out.violating_set = v.J;
          out.violating_g = v.g;
          return false;
        }
        return true;
      });
  if (!status.ok()) return status;
  return out;
}

}  // namespace submod
