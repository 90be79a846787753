/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_FIXATION_HPP
#define CLIQUEPART_CORE_FIXATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace cliquepart {

enum class EdgeState : int8_t { kFree = 0, kIncluded = 1, kExcluded = 2 };

// Branching decisions per unordered node pair. Kept transitively consistent:
// included edges form an equivalence-like relation, and an included edge
// combined with an excluded one forces further exclusions.
class EdgeFixations {
 public:
  explicit EdgeFixations(int n)
      : n_(n),
        state_(static_cast<size_t>(n) * static_cast<size_t>(n),
               EdgeState::kFree) {}

  int node_count() const { return n_; }

  EdgeState get(int i, int j) const { return state_[idx(i, j)]; }
  bool is_free(int i, int j) const { return get(i, j) == EdgeState::kFree; }

  // Raw setter without closure; propagate_transitivity is the consistent way
  // to fix an edge.
  void set(int i, int j, EdgeState s) {
    state_[idx(i, j)] = s;
    state_[idx(j, i)] = s;
  }

  int fixed_count() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }

  int n_;
  std::vector<EdgeState> state_;
};

// Fixes edge (a, b) as included or excluded and restores transitive closure
// over the touched nodes. Returns nullopt when the decision contradicts an
// existing fixation, which fathoms the branch.
std::optional<EdgeFixations> propagate_transitivity(const EdgeFixations& fixations,
                                                    int a, int b, bool include);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_FIXATION_HPP
