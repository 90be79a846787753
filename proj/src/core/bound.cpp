/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/bound.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "core/common.hpp"
#include "core/lp.hpp"

namespace cliquepart {

double fixation_base_penalty(const WeightedGraph& graph,
                             const EdgeFixations& fixations) {
  double p0 = 0.0;
  int n = graph.node_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      EdgeState s = fixations.get(i, j);
      double w = graph.weight(i, j);
      if ((s == EdgeState::kIncluded && w < 0) ||
          (s == EdgeState::kExcluded && w > 0))
        p0 += std::fabs(w);
    }
  return p0;
}

std::vector<Subnetwork> carryover_chains(const PenaltyModel& model) {
  std::vector<Subnetwork> chains;
  for (const WeightedSubnetwork& ws : model.subnetworks) {
    if (ws.subnetwork.kind != SubnetworkKind::kChain) continue;
    if (ws.multiplier <= kLpTol) continue;
    Subnetwork c = ws.subnetwork;
    for (SubnetworkEdge& e : c.edges) e.reduced *= ws.multiplier;
    c.reduced_magnitude *= ws.multiplier;
    c.penalty *= ws.multiplier;
    chains.push_back(std::move(c));
  }
  return chains;
}

namespace {

BoundResult finish(const WeightedGraph& graph, const EdgeFixations& fixations,
                   double penalty, PenaltyModel model) {
  BoundResult r;
  r.penalty = penalty;
  r.base_penalty = fixation_base_penalty(graph, fixations);
  r.upper_bound = trivial_upper_bound(graph) - r.base_penalty - r.penalty;
  r.model = std::move(model);
  return r;
}

// A previously found chain stays usable as long as no edge got fixed against
// its reduced sign.
bool chain_still_valid(const Subnetwork& chain, const EdgeFixations& fixations) {
  for (const SubnetworkEdge& e : chain.edges) {
    EdgeState s = fixations.get(e.u, e.v);
    if ((s == EdgeState::kIncluded && e.reduced < 0) ||
        (s == EdgeState::kExcluded && e.reduced > 0))
      return false;
  }
  return true;
}

}  // namespace

BoundResult calc_penalty_lp(const WeightedGraph& graph,
                            const EdgeFixations& fixations, bool use_stars,
                            const std::vector<Subnetwork>& previous_chains,
                            Rng& rng) {
  std::vector<Subnetwork> candidates = enumerate_chains(graph, fixations, 4);
  // Longer chains only arise from the heuristic; re-offer the ones that are
  // still valid with a fresh penalty against the unscaled weights.
  for (const Subnetwork& c : previous_chains) {
    if (c.kind != SubnetworkKind::kChain || c.nodes.size() <= 4) continue;
    if (!chain_still_valid(c, fixations)) continue;
    if (auto fresh = make_chain(c.nodes, graph, fixations))
      candidates.push_back(*fresh);
  }
  if (use_stars && fixations.fixed_count() == 0) {
    std::vector<Subnetwork> stars = find_stars(graph);
    candidates.insert(candidates.end(), stars.begin(), stars.end());
  }

  PenaltyLp lp = build_penalty_lp(graph, candidates, fixations);
  LpSolution sol = solve_lp(lp.problem);
  if (sol.status != LpStatus::kOptimal) {
    BoundResult fallback = calc_penalty_heuristic(graph, fixations,
                                                  previous_chains, rng);
    fallback.lp_fallback = true;
    return fallback;
  }

  PenaltyModel model;
  for (size_t j = 0; j < lp.columns.size(); ++j)
    if (sol.assignment[j] > kLpTol)
      model.subnetworks.push_back({lp.columns[j], sol.assignment[j]});
  return finish(graph, fixations, sol.value, std::move(model));
}

BoundResult calc_penalty_heuristic(const WeightedGraph& graph,
                                   const EdgeFixations& fixations,
                                   const std::vector<Subnetwork>& previous_chains,
                                   Rng& rng) {
  int n = graph.node_count();
  WeightedGraph residual = graph;
  PenaltyModel model;
  double penalty = 0.0;

  auto subtract = [&](const Subnetwork& chain) {
    for (const SubnetworkEdge& e : chain.edges) {
      if (!fixations.is_free(e.u, e.v)) continue;
      double delta = e.reduced > 0 ? -std::fabs(e.reduced) : std::fabs(e.reduced);
      residual.set_weight(e.u, e.v, residual.weight(e.u, e.v) + delta);
    }
  };

  // Phase 1: keep surviving chains at multiplier one, re-subtracting exactly
  // their creation-time penalty.
  for (const Subnetwork& c : previous_chains) {
    if (c.kind != SubnetworkKind::kChain) continue;
    if (!chain_still_valid(c, fixations)) continue;
    subtract(c);
    penalty += c.penalty;
    model.subnetworks.push_back({c, 1.0});
  }

  // Phase 2: close negative residual edges through shortest positive
  // residual paths, growing the allowed path length.
  for (int len = 2; len <= n - 1; ++len) {
    // Components of the positive residual graph; a negative closer inside
    // one is reachable work, otherwise no chain of any length remains.
    std::vector<int> comp(n, -1);
    int labels = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] != -1) continue;
      int label = labels++;
      std::vector<int> stack{s};
      comp[s] = label;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
          if (comp[v] == -1 && residual.weight(u, v) > kFeasEps &&
              fixations.get(u, v) != EdgeState::kExcluded) {
            comp[v] = label;
            stack.push_back(v);
          }
      }
    }
    std::vector<std::pair<int, int>> negatives;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (residual.weight(i, j) < -kFeasEps &&
            fixations.get(i, j) != EdgeState::kIncluded && comp[i] == comp[j])
          negatives.push_back({i, j});
    if (negatives.empty()) break;

    rng.shuffle(negatives);
    for (auto [u, v] : negatives) {
      // Excluded closers keep their residual (subtract skips fixed edges);
      // their loop ends when no positive path remains.
      while (residual.weight(u, v) < -kFeasEps) {
        auto path = shortest_positive_path(residual, fixations, u, v, len);
        if (!path) break;
        auto chain = make_chain(*path, residual, fixations);
        if (!chain) break;
        subtract(*chain);
        penalty += chain->penalty;
        model.subnetworks.push_back({*chain, 1.0});
      }
    }
  }
  return finish(graph, fixations, penalty, std::move(model));
}

}  // namespace cliquepart
