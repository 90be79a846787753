/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_RNG_HPP
#define CLIQUEPART_CORE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace cliquepart {

// splitmix64 finalizer; used to derive independent stream seeds from one
// master seed so that every randomized component gets its own reproducible
// stream.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// mt19937_64 is bit-identical across conforming implementations; the
// distributions in <random> are not, so integers and unit doubles are built
// here by hand (rejection sampling, no modulo bias).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform over {lo, ..., hi}, inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<int64_t>(next_u64());  // full 64-bit span
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return lo + static_cast<int64_t>(v % range);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Fisher-Yates, driven by uniform_int for portability.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_RNG_HPP
