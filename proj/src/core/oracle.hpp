/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_ORACLE_HPP
#define CLIQUEPART_CORE_ORACLE_HPP

#include "core/fixation.hpp"
#include "core/graph.hpp"

namespace cliquepart {

inline constexpr int kOracleNodeCap = 13;

// Ground truth by exhaustive enumeration of all set partitions (restricted
// growth strings, incremental scoring, no pruning). Ties resolve to the
// lexicographically smallest string. Capped at 13 nodes.
Partition brute_force_optimum(const WeightedGraph& graph);

// Same enumeration restricted to partitions consistent with the fixations
// (included pairs share a label, excluded pairs differ). Used to certify
// bounds on constrained subproblems.
Partition brute_force_optimum_constrained(const WeightedGraph& graph,
                                          const EdgeFixations& fixations);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_ORACLE_HPP
