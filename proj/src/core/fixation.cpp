/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/fixation.hpp"

namespace cliquepart {

int EdgeFixations::fixed_count() const {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!is_free(i, j)) ++count;
  return count;
}

namespace {

// Applies one fixation; false on contradiction.
bool apply(EdgeFixations& f, int u, int v, EdgeState s) {
  if (u == v) return s == EdgeState::kIncluded;
  EdgeState cur = f.get(u, v);
  if (cur == s) return true;
  if (cur != EdgeState::kFree) return false;
  f.set(u, v, s);
  return true;
}

}  // namespace

std::optional<EdgeFixations> propagate_transitivity(const EdgeFixations& fixations,
                                                    int a, int b, bool include) {
  int n = fixations.node_count();
  EdgeFixations out = fixations;

  // A: nodes already tied to a (plus a itself); X: nodes cut from a.
  // B, Y: the same relative to b. Membership is read from the input state,
  // which is assumed consistent.
  std::vector<int> group_a{a}, group_b{b}, cut_a, cut_b;
  for (int u = 0; u < n; ++u) {
    if (u != a) {
      EdgeState s = fixations.get(u, a);
      if (s == EdgeState::kIncluded) group_a.push_back(u);
      else if (s == EdgeState::kExcluded) cut_a.push_back(u);
    }
    if (u != b) {
      EdgeState s = fixations.get(u, b);
      if (s == EdgeState::kIncluded) group_b.push_back(u);
      else if (s == EdgeState::kExcluded) cut_b.push_back(u);
    }
  }

  if (include) {
    for (int u : group_a)
      for (int v : group_b)
        if (u != v && !apply(out, u, v, EdgeState::kIncluded)) return std::nullopt;
    for (int u : group_a)
      for (int v : cut_b)
        if (!apply(out, u, v, EdgeState::kExcluded)) return std::nullopt;
    for (int u : group_b)
      for (int v : cut_a)
        if (!apply(out, u, v, EdgeState::kExcluded)) return std::nullopt;
  } else {
    for (int u : group_a)
      for (int v : group_b) {
        if (u == v) return std::nullopt;  // a and b already share a cluster
        if (!apply(out, u, v, EdgeState::kExcluded)) return std::nullopt;
      }
  }
  return out;
}

}  // namespace cliquepart
