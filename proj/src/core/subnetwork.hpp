/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_SUBNETWORK_HPP
#define CLIQUEPART_CORE_SUBNETWORK_HPP

#include <optional>
#include <vector>

#include "core/fixation.hpp"
#include "core/graph.hpp"

namespace cliquepart {

struct SubnetworkEdge {
  int u, v;
  double reduced;  // signed reduced weight, magnitude p
};

enum class SubnetworkKind { kChain, kStar };

// A penalizing subnetwork in reduced form. Chains: a positive path closed by
// one negative edge, every reduced magnitude equal to p, penalty p. Stars: a
// hub joined by three node-disjoint positive paths to a negative triangle,
// reduced magnitudes p, penalty 2p.
struct Subnetwork {
  SubnetworkKind kind = SubnetworkKind::kChain;
  // Chain: path node order, closing edge (front, back), front < back.
  // Star: hub first, then the three terminals.
  std::vector<int> nodes;
  std::vector<SubnetworkEdge> edges;
  double reduced_magnitude = 0.0;  // p
  double penalty = 0.0;            // chain: p, star: 2p
};

// p = min(path weights, |closing weight|); requires at least two strictly
// positive path weights and a strictly negative closing weight.
double chain_penalty(const std::vector<double>& path_weights, double closing_weight);

// Builds the reduced chain for a node path whose closing edge is
// (path.front(), path.back()), evaluated against the given weights. Edges
// fixed by `fixations` act as permanent glue/cuts and do not cap the
// penalty. Returns nullopt if no free edge caps the penalty (only reachable
// from an inconsistent fixation state).
std::optional<Subnetwork> make_chain(const std::vector<int>& path,
                                     const WeightedGraph& weights,
                                     const EdgeFixations& fixations);

// Re-running the penalty rule on an already reduced chain yields the same p.
Subnetwork reduce_chain(const Subnetwork& chain);

// All chains with `max_nodes` in {3, 4} nodes: path edges strictly positive
// and not excluded, closing edge strictly negative and not included. A chain
// equals its reversal; the canonical form puts the smaller closing endpoint
// first, so each chain is emitted exactly once.
std::vector<Subnetwork> enumerate_chains(const WeightedGraph& graph,
                                         const EdgeFixations& fixations,
                                         int max_nodes);

// Minimum-hop path from `from` to `to` over edges with weight > eps that are
// not excluded; ties resolve toward lower node indices. Nullopt when no path
// of at most max_len hops exists.
std::optional<std::vector<int>> shortest_positive_path(const WeightedGraph& weights,
                                                       const EdgeFixations& fixations,
                                                       int from, int to, int max_len);

// One star per (negative triangle, hub) pair whose three shortest positive
// paths share no node beyond the hub; at most max_stars emitted, larger
// penalties preferred.
std::vector<Subnetwork> find_stars(const WeightedGraph& graph, size_t max_stars);
std::vector<Subnetwork> find_stars(const WeightedGraph& graph);

struct WeightedSubnetwork {
  Subnetwork subnetwork;
  double multiplier = 0.0;  // lambda >= 0
};

// Active linear combination of penalizing subnetworks together with the edge
// capacity each one consumes.
struct PenaltyModel {
  std::vector<WeightedSubnetwork> subnetworks;

  double total_penalty() const;
  // |w_ij| - sum of lambda * p over members using (i, j), for all pairs.
  std::vector<double> residual_capacities(const WeightedGraph& graph) const;
};

// Definition check for a permissible linear combination: combined magnitudes
// within original magnitudes and sign-compatible, both within kFeasEps.
bool is_permissible(const PenaltyModel& model, const WeightedGraph& graph);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_SUBNETWORK_HPP
