/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_SEARCH_HPP
#define CLIQUEPART_CORE_SEARCH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace cliquepart {

struct SolveConfig {
  uint64_t seed = 1;
  int lp_period = 4;        // LP bound every lp_period levels, heuristic otherwise
  bool use_stars = false;   // stars in the root bound
  double time_limit_s = 0;  // <= 0: no limit
};

struct SolveStats {
  int64_t nodes = 0;  // branching-body invocations
  int64_t lp_solves = 0;
  int64_t heuristic_solves = 0;
  double time_ms = 0.0;
};

struct SolveReport {
  Partition best;
  double q_trivial = 0.0;   // trivial upper bound
  double q_initial = 0.0;   // initial heuristic score
  double root_bound = 0.0;  // best bound established at the root
  bool proved_at_root = false;
  bool timed_out = false;
  SolveStats stats;
};

// Strictly positive edges by decreasing weight, ties by ascending (i, j).
// Heavier edges first: excluding one costs the most, so deciding them early
// prunes best.
std::vector<std::pair<int, int>> order_positive_edges(const WeightedGraph& graph);

// Exact solution by depth-first branching over edge fixations with
// penalty-based fathoming. Deterministic for identical config and seed.
SolveReport branch_and_bound(const WeightedGraph& graph, const SolveConfig& config);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_SEARCH_HPP
