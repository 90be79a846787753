/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/subnetwork.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "core/common.hpp"

namespace cliquepart {

double chain_penalty(const std::vector<double>& path_weights, double closing_weight) {
  if (path_weights.size() < 2)
    throw Error("chain needs at least two path edges");
  if (closing_weight >= 0)
    throw Error("chain closing weight must be negative");
  double p = -closing_weight;
  for (double w : path_weights) {
    if (w <= 0) throw Error("chain path weights must be positive");
    p = std::min(p, w);
  }
  return p;
}

std::optional<Subnetwork> make_chain(const std::vector<int>& path,
                                     const WeightedGraph& weights,
                                     const EdgeFixations& fixations) {
  size_t k = path.size();
  if (k < 3) return std::nullopt;
  int front = path.front(), back = path.back();

  // Fixed edges are permanent glue (included) or cuts (excluded): they cannot
  // be resolved away, so only free edges cap the penalty.
  double p = kInf;
  for (size_t i = 0; i + 1 < k; ++i) {
    int u = path[i], v = path[i + 1];
    if (fixations.is_free(u, v)) {
      double w = weights.weight(u, v);
      if (w <= kFeasEps) return std::nullopt;
      p = std::min(p, w);
    }
  }
  if (fixations.is_free(front, back)) {
    double w = weights.weight(front, back);
    if (w >= -kFeasEps) return std::nullopt;
    p = std::min(p, -w);
  }
  if (p >= kInf) return std::nullopt;  // every edge fixed; nothing to resolve

  Subnetwork chain;
  chain.kind = SubnetworkKind::kChain;
  chain.nodes = path;
  if (back < front) std::reverse(chain.nodes.begin(), chain.nodes.end());
  chain.reduced_magnitude = p;
  chain.penalty = p;
  for (size_t i = 0; i + 1 < k; ++i)
    chain.edges.push_back({chain.nodes[i], chain.nodes[i + 1], p});
  chain.edges.push_back({chain.nodes.front(), chain.nodes.back(), -p});
  return chain;
}

Subnetwork reduce_chain(const Subnetwork& chain) {
  Subnetwork reduced = chain;
  double p = kInf;
  for (const SubnetworkEdge& e : chain.edges) p = std::min(p, std::fabs(e.reduced));
  for (SubnetworkEdge& e : reduced.edges)
    e.reduced = e.reduced < 0 ? -p : p;
  reduced.reduced_magnitude = p;
  reduced.penalty = p;
  return reduced;
}

namespace {

bool path_edge_ok(const WeightedGraph& g, const EdgeFixations& f, int u, int v) {
  return g.weight(u, v) > kFeasEps && f.get(u, v) != EdgeState::kExcluded;
}

bool closing_edge_ok(const WeightedGraph& g, const EdgeFixations& f, int u, int v) {
  return g.weight(u, v) < -kFeasEps && f.get(u, v) != EdgeState::kIncluded;
}

}  // namespace

std::vector<Subnetwork> enumerate_chains(const WeightedGraph& graph,
                                         const EdgeFixations& fixations,
                                         int max_nodes) {
  if (max_nodes != 3 && max_nodes != 4)
    throw Error("chain enumeration supports 3 or 4 nodes");
  int n = graph.node_count();
  std::vector<Subnetwork> chains;
  // Anchoring the closing pair at a < b emits each chain once; the reversal
  // of a path from a to b starts at b and is never generated.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!closing_edge_ok(graph, fixations, a, b)) continue;
      for (int x = 0; x < n; ++x) {
        if (x == a || x == b) continue;
        if (!path_edge_ok(graph, fixations, a, x)) continue;
        if (path_edge_ok(graph, fixations, x, b))
          if (auto c = make_chain({a, x, b}, graph, fixations)) chains.push_back(*c);
        if (max_nodes < 4) continue;
        for (int y = 0; y < n; ++y) {
          if (y == a || y == b || y == x) continue;
          if (!path_edge_ok(graph, fixations, x, y)) continue;
          if (path_edge_ok(graph, fixations, y, b))
            if (auto c = make_chain({a, x, y, b}, graph, fixations))
              chains.push_back(*c);
        }
      }
    }
  }
  return chains;
}

std::optional<std::vector<int>> shortest_positive_path(const WeightedGraph& weights,
                                                       const EdgeFixations& fixations,
                                                       int from, int to, int max_len) {
  int n = weights.node_count();
  std::vector<int> parent(n, -1), dist(n, -1);
  std::deque<int> queue;
  parent[from] = from;
  dist[from] = 0;
  queue.push_back(from);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    if (dist[u] >= max_len) continue;
    // Ascending neighbor order makes tie-breaking deterministic: among equal
    // hop counts the path through the smallest intermediate index wins.
    for (int v = 0; v < n; ++v) {
      if (parent[v] != -1 || v == u) continue;
      if (weights.weight(u, v) > kFeasEps &&
          fixations.get(u, v) != EdgeState::kExcluded) {
        parent[v] = u;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  if (parent[to] == -1 || dist[to] > max_len) return std::nullopt;
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

bool paths_disjoint(const std::vector<std::vector<int>>& paths, int hub) {
  std::vector<int> seen;
  for (const auto& path : paths)
    for (int v : path) {
      if (v == hub) continue;
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
      seen.push_back(v);
    }
  return true;
}

}  // namespace

std::vector<Subnetwork> find_stars(const WeightedGraph& graph, size_t max_stars) {
  int n = graph.node_count();
  EdgeFixations none(n);
  std::vector<Subnetwork> stars;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (graph.weight(i, j) >= -kFeasEps) continue;
      for (int k = j + 1; k < n; ++k) {
        if (graph.weight(i, k) >= -kFeasEps || graph.weight(j, k) >= -kFeasEps)
          continue;
        // Negative triangle (i, j, k); try every hub.
        for (int m = 0; m < n; ++m) {
          if (m == i || m == j || m == k) continue;
          auto pi = shortest_positive_path(graph, none, m, i, n);
          if (!pi) continue;
          auto pj = shortest_positive_path(graph, none, m, j, n);
          if (!pj) continue;
          auto pk = shortest_positive_path(graph, none, m, k, n);
          if (!pk) continue;
          std::vector<std::vector<int>> paths{*pi, *pj, *pk};
          if (!paths_disjoint(paths, m)) continue;

          double p = std::min({-graph.weight(i, j), -graph.weight(i, k),
                               -graph.weight(j, k)});
          Subnetwork star;
          star.kind = SubnetworkKind::kStar;
          star.nodes = {m, i, j, k};
          for (const auto& path : paths)
            for (size_t t = 0; t + 1 < path.size(); ++t) {
              p = std::min(p, graph.weight(path[t], path[t + 1]));
              star.edges.push_back({path[t], path[t + 1], 0.0});
            }
          star.edges.push_back({i, j, 0.0});
          star.edges.push_back({i, k, 0.0});
          star.edges.push_back({j, k, 0.0});
          for (SubnetworkEdge& e : star.edges)
            e.reduced = graph.weight(e.u, e.v) < 0 ? -p : p;
          star.reduced_magnitude = p;
          star.penalty = 2 * p;
          stars.push_back(std::move(star));
        }
      }
    }
  if (stars.size() > max_stars) {
    std::stable_sort(stars.begin(), stars.end(),
                     [](const Subnetwork& a, const Subnetwork& b) {
                       return a.reduced_magnitude > b.reduced_magnitude;
                     });
    stars.resize(max_stars);
  }
  return stars;
}

std::vector<Subnetwork> find_stars(const WeightedGraph& graph) {
  return find_stars(graph, 50 * static_cast<size_t>(graph.node_count()));
}

double PenaltyModel::total_penalty() const {
  double p = 0.0;
  for (const WeightedSubnetwork& ws : subnetworks)
    p += ws.multiplier * ws.subnetwork.penalty;
  return p;
}

std::vector<double> PenaltyModel::residual_capacities(const WeightedGraph& graph) const {
  int n = graph.node_count();
  std::vector<double> residual(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      residual[static_cast<size_t>(i) * n + j] = std::fabs(graph.weight(i, j));
  for (const WeightedSubnetwork& ws : subnetworks)
    for (const SubnetworkEdge& e : ws.subnetwork.edges) {
      double used = ws.multiplier * std::fabs(e.reduced);
      residual[static_cast<size_t>(e.u) * n + e.v] -= used;
      residual[static_cast<size_t>(e.v) * n + e.u] -= used;
    }
  return residual;
}

bool is_permissible(const PenaltyModel& model, const WeightedGraph& graph) {
  int n = graph.node_count();
  std::vector<double> combined(static_cast<size_t>(n) * n, 0.0);
  for (const WeightedSubnetwork& ws : model.subnetworks)
    for (const SubnetworkEdge& e : ws.subnetwork.edges) {
      combined[static_cast<size_t>(e.u) * n + e.v] += ws.multiplier * e.reduced;
      combined[static_cast<size_t>(e.v) * n + e.u] += ws.multiplier * e.reduced;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double c = combined[static_cast<size_t>(i) * n + j];
      double w = graph.weight(i, j);
      if (std::fabs(c) > std::fabs(w) + kFeasEps) return false;
      if (c * w < 0) return false;
    }
  return true;
}

}  // namespace cliquepart
