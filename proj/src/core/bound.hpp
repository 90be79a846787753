/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_BOUND_HPP
#define CLIQUEPART_CORE_BOUND_HPP

#include <vector>

#include "core/fixation.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "core/subnetwork.hpp"

namespace cliquepart {

struct BoundResult {
  double penalty = 0.0;       // P, from the active subnetworks
  double base_penalty = 0.0;  // P0, from edges fixed against their sign
  double upper_bound = 0.0;   // trivial bound - P0 - P
  PenaltyModel model;
  bool lp_fallback = false;  // heuristic result after a solver failure
};

// |w| summed over edges fixed included with negative weight or excluded with
// positive weight; such fixations lose the full edge weight outright.
double fixation_base_penalty(const WeightedGraph& graph,
                             const EdgeFixations& fixations);

// LP bound: enumerates 3- and 4-node chains under the fixations (stars too,
// at the root, when requested), re-offers still-valid longer chains from
// previous rounds, and solves the capacity LP. Falls back to the heuristic
// bound if the solver fails. `rng` is only consumed on that fallback.
BoundResult calc_penalty_lp(const WeightedGraph& graph,
                            const EdgeFixations& fixations, bool use_stars,
                            const std::vector<Subnetwork>& previous_chains,
                            Rng& rng);

// Greedy bound: keeps still-valid previous chains at multiplier one,
// re-subtracting their creation-time penalty, then repeatedly closes
// shuffled negative residual edges through shortest positive residual paths
// of growing length.
BoundResult calc_penalty_heuristic(const WeightedGraph& graph,
                                   const EdgeFixations& fixations,
                                   const std::vector<Subnetwork>& previous_chains,
                                   Rng& rng);

// Chains of a bound's model with reduced weights and penalties scaled by
// their multipliers, ready to carry into the next level's bound call. Stars
// are dropped; their capacity returns to the residual.
std::vector<Subnetwork> carryover_chains(const PenaltyModel& model);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_BOUND_HPP
