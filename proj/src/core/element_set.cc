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

#include "submod/core/element_set.h"

#include <algorithm>
#include <cassert>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace submod {

ElementSet::ElementSet(int ground_size)
    : ground_size_(ground_size), words_((ground_size + 63) / 64, 0) {
  assert(ground_size >= 0);
}

ElementSet::ElementSet(int ground_size, std::initializer_list<int> members)
    : ElementSet(ground_size) {
  for (int m : members) {
    assert(m >= 0 && m < ground_size);
    Insert(m);
  }
}

ElementSet ElementSet::Full(int ground_size) {
  ElementSet s(ground_size);
  std::fill(s.words_.begin(), s.words_.end(), ~uint64_t{0});
  s.ClearTail();
  return s;
}

absl::StatusOr<ElementSet> ElementSet::FromMembers(
    int ground_size, std::span<const int> members) {
  ElementSet s(ground_size);
  for (int m : members) {
    if (m < 0 || m >= ground_size) {
      return absl::InvalidArgumentError(absl::StrCat(
          "element ", m, " outside ground set of size ", ground_size));
    }
    s.Insert(m);
  }
  return s;
}

ElementSet ElementSet::FromMask(int ground_size, uint64_t mask) {
  assert(ground_size <= 64);
  ElementSet s(ground_size);
  if (ground_size > 0) {
    s.words_[0] = mask;
    s.ClearTail();
  }
  return s;
}

absl::StatusOr<ElementSet> ElementSet::FromHex(int ground_size,
                                               const std::string& hex) {
  ElementSet s(ground_size);
  int bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const char c = *it;
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("invalid hex digit '", std::string(1, c), "'"));
    }
    for (int i = 0; i < 4; ++i) {
      if ((nibble >> i) & 1) {
        if (bit + i >= ground_size) {
          return absl::InvalidArgumentError(absl::StrCat(
              "hex set '", hex, "' has members outside ground set of size ",
              ground_size));
        }
        s.Insert(bit + i);
      }
    }
  }
  return s;
}

int ElementSet::Count() const {
  int c = 0;
  for (uint64_t w : words_) c += __builtin_popcountll(w);
  return c;
}

bool ElementSet::Empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  assert(ground_size_ == other.ground_size_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  assert(ground_size_ == other.ground_size_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  assert(ground_size_ == other.ground_size_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

int ElementSet::IntersectionCount(const ElementSet& other) const {
  assert(ground_size_ == other.ground_size_);
  int c = 0;
  for (size_t i = 0; i < words_.size(); ++i) {
    c += __builtin_popcountll(words_[i] & other.words_[i]);
  }
  return c;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  assert(ground_size_ == other.ground_size_);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ElementSet::Intersects(const ElementSet& other) const {
  assert(ground_size_ == other.ground_size_);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

ElementSet ElementSet::With(int element) const {
  ElementSet s = *this;
  s.Insert(element);
  return s;
}

ElementSet ElementSet::Without(int element) const {
  ElementSet s = *this;
  s.Erase(element);
  return s;
}

ElementSet ElementSet::Complement() const {
  ElementSet s = *this;
  for (uint64_t& w : s.words_) w = ~w;
  s.ClearTail();
  return s;
}

std::vector<int> ElementSet::Members() const {
  std::vector<int> out;
  out.reserve(Count());
  ForEach([&out](int e) { out.push_back(e); });
  return out;
}

uint64_t ElementSet::ToMask() const {
  assert(ground_size_ <= 64);
  return words_.empty() ? 0 : words_[0];
}

std::string ElementSet::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = std::max(1, (ground_size_ + 3) / 4);
  std::string out(digits, '0');
  for (int d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int i = 0; i < 4; ++i) {
      const int e = 4 * d + i;
      if (e < ground_size_ && Contains(e)) nibble |= 1 << i;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::string ElementSet::ToString() const {
  return absl::StrCat("{", absl::StrJoin(Members(), ","), "}");
}

size_t ElementSet::Hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(ground_size_);
  for (uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  if (a.ground_size_ != b.ground_size_) return a.ground_size_ < b.ground_size_;
  return a.words_ < b.words_;
}

void ElementSet::ClearTail() {
  const int rem = ground_size_ & 63;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (uint64_t{1} << rem) - 1;
  }
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  return os << s.ToString();
}

}  // namespace submod
