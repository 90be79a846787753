/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_LP_HPP
#define CLIQUEPART_CORE_LP_HPP

#include <string>
#include <utility>
#include <vector>

#include "core/fixation.hpp"
#include "core/graph.hpp"
#include "core/subnetwork.hpp"

namespace cliquepart {

// Maximization problem over "<=" rows with nonnegative right-hand sides, so
// the all-lower-bound point is feasible and no phase-1 is needed. Both
// problem families built here (penalty LP, relaxed ILP) have this shape.
struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (column, coefficient)
  double rhs = 0.0;
};

struct LpProblem {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower;  // >= 0
  std::vector<double> upper;  // may be kInf
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kFailure };

struct LpSolution {
  LpStatus status = LpStatus::kFailure;
  double value = 0.0;
  std::vector<double> assignment;
};

// Dense revised simplex with bounded variables. Dantzig pricing, switching to
// Bland's rule after a degeneracy streak; periodic refactorization; iteration
// cap of 1e6 after which kFailure is reported and the caller falls back to
// the heuristic bound. Deterministic for identical input.
LpSolution solve_lp(const LpProblem& problem);

// Plain-text layout (objective line, one constraint per line, bounds
// section) for diagnostics.
std::string dump_lp(const LpProblem& problem);

// Penalty LP (one variable per subnetwork, one capacity row per free edge in
// use). Subnetworks containing an edge fixed against their reduced sign are
// dropped before building; edges whose fixation already matches the sign
// need no capacity row.
struct PenaltyLp {
  LpProblem problem;
  std::vector<Subnetwork> columns;            // surviving subnetworks
  std::vector<std::pair<int, int>> row_edges;  // row -> (u, v)
};

PenaltyLp build_penalty_lp(const WeightedGraph& graph,
                           const std::vector<Subnetwork>& subnetworks,
                           const EdgeFixations& fixations);

inline constexpr int kRelaxedIlpNodeCap = 40;

// LP relaxation of the integer formulation: a variable per pair in [0, 1]
// and all three triangle inequalities per node triple.
LpProblem build_relaxed_ilp(const WeightedGraph& graph,
                            int node_cap = kRelaxedIlpNodeCap);

// Optimal relaxation value plus the loop offset; an upper bound on the
// partition quality used as an independent comparison oracle.
double relaxed_upper_bound(const WeightedGraph& graph,
                           int node_cap = kRelaxedIlpNodeCap);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_LP_HPP
