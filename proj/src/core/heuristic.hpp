/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_HEURISTIC_HPP
#define CLIQUEPART_CORE_HEURISTIC_HPP

#include <cstdint>

#include "core/graph.hpp"

namespace cliquepart {

// Best-improvement single-node relocations and pairwise cluster merges until
// a fixed point. The returned score never falls below the input score and is
// always the exact quality of the returned assignment.
Partition local_search(const WeightedGraph& graph, Partition partition);

// Initial feasible solution: greedy agglomerative merging from singletons
// refined by local_search, plus seeded random restarts, best kept.
// Deterministic per seed.
Partition initial_solution(const WeightedGraph& graph, uint64_t seed);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_HEURISTIC_HPP
