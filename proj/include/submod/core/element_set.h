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

#ifndef SUBMOD_CORE_ELEMENT_SET_H_
#define SUBMOD_CORE_ELEMENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace submod {

// A subset of the ground set {0, ..., n-1}, stored as a bit vector. Element 0
// is the least-significant bit of the first word.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int ground_size);
  ElementSet(int ground_size, std::initializer_list<int> members);

  static ElementSet Full(int ground_size);
  // Builds a set from a list of members; fails on out-of-range members.
  static absl::StatusOr<ElementSet> FromMembers(int ground_size,
                                                std::span<const int> members);
  // Low `ground_size` bits of `mask`. Requires ground_size <= 64.
  static ElementSet FromMask(int ground_size, uint64_t mask);
  // Parses the hex encoding produced by ToHex().
  static absl::StatusOr<ElementSet> FromHex(int ground_size,
                                            const std::string& hex);

  int ground_size() const { return ground_size_; }
  int Count() const;
  bool Empty() const;
  bool Contains(int element) const {
    return (words_[element >> 6] >> (element & 63)) & 1u;
  }

  void Insert(int element) { words_[element >> 6] |= Bit(element); }
  void Erase(int element) { words_[element >> 6] &= ~Bit(element); }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }

  // |this ∩ other| without materializing the intersection.
  int IntersectionCount(const ElementSet& other) const;
  bool IsSubsetOf(const ElementSet& other) const;
  bool Intersects(const ElementSet& other) const;

  ElementSet With(int element) const;
  ElementSet Without(int element) const;
  ElementSet Complement() const;

  // Members in ascending order.
  std::vector<int> Members() const;
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        fn(static_cast<int>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

  // Requires ground_size <= 64.
  uint64_t ToMask() const;
  // Fixed-width lowercase hex, ceil(n/4) digits, most significant first.
  std::string ToHex() const;
  // "{0,3,5}".
  std::string ToString() const;

  std::span<const uint64_t> words() const { return words_; }
  size_t Hash() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.ground_size_ == b.ground_size_ && a.words_ == b.words_;
  }
  // Lexicographic on the word vector; used only for deterministic ordering.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

 private:
  static uint64_t Bit(int element) { return uint64_t{1} << (element & 63); }
  void ClearTail();

  int ground_size_ = 0;
  std::vector<uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

}  // namespace submod

#endif  // SUBMOD_CORE_ELEMENT_SET_H_
