/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/generators.hpp"

#include <vector>

#include "core/common.hpp"
#include "core/rng.hpp"

namespace cliquepart {

WeightedGraph gen_set1(int n, int q, uint64_t seed) {
  if (n < 2) throw Error("set1 requires n >= 2");
  if (q < 1) throw Error("set1 requires q >= 1");
  Rng rng(seed);
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.set_weight(i, j, static_cast<double>(rng.uniform_int(-q, q)));
  return g;
}

WeightedGraph gen_set2(int n, int p, uint64_t seed) {
  if (n < 2) throw Error("set2 requires n >= 2");
  if (p < 1) throw Error("set2 requires p >= 1");
  Rng rng(seed);
  std::vector<std::vector<int>> vec(n, std::vector<int>(p));
  for (int v = 0; v < n; ++v)
    for (int t = 0; t < p; ++t) vec[v][t] = static_cast<int>(rng.uniform_int(0, 1));
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int differ = 0;
      for (int t = 0; t < p; ++t) differ += vec[i][t] != vec[j][t];
      g.set_weight(i, j, static_cast<double>(p - 2 * differ));
    }
  return g;
}

WeightedGraph gen_set3(int n, int q, double zero_prob, uint64_t seed) {
  if (zero_prob < 0.0 || zero_prob > 1.0)
    throw Error("set3 zero probability must be in [0, 1]");
  WeightedGraph g = gen_set1(n, q, seed);
  // Zeroing uses a separate stream so the base draw matches set1 exactly.
  Rng zero(mix_seed(seed, 0x5e7));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (zero.uniform_unit() < zero_prob) g.set_weight(i, j, 0.0);
  return g;
}

}  // namespace cliquepart
