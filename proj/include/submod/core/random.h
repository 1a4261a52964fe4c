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

#ifndef SUBMOD_CORE_RANDOM_H_
#define SUBMOD_CORE_RANDOM_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace submod {

// SplitMix64 finalizer.
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed for the i-th independent trial of an experiment seeded with `seed`.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  return Mix64(seed ^ Mix64(index + 0x2545f4914f6cdd1dull));
}

// Counter-based generator: the i-th output of stream (seed, stream) is a pure
// function of (seed, stream, i). Streams are independent for practical
// purposes, so per-vertex or per-trial streams can be consumed in any order
// and still give bit-identical results on every platform.
class Rng {
 public:
  Rng(uint64_t seed, uint64_t stream = 0)
      : key_(Mix64(seed ^ Mix64(stream + 0x632be59bd9b4e019ull))) {}

  uint64_t Next() { return Mix64(key_ ^ Mix64(counter_++)); }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t Uniform(uint64_t bound) {
    // Lemire's multiply-shift with rejection.
    uint64_t x = Next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    uint64_t low = static_cast<uint64_t>(m);
    if (low < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = Next();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  int UniformInt(int bound) {
    return static_cast<int>(Uniform(static_cast<uint64_t>(bound)));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return UniformDouble() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Uniform(i)]);
    }
  }

  // Child stream keyed by this generator's key and `stream`.
  Rng Fork(uint64_t stream) const { return Rng(key_, stream); }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace submod

#endif  // SUBMOD_CORE_RANDOM_H_
