/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/oracle.hpp"

#include <vector>

#include "core/common.hpp"

namespace cliquepart {

namespace {

struct Enumerator {
  const WeightedGraph& graph;
  const EdgeFixations* fixations;  // may be null
  int n;
  std::vector<int> labels;
  std::vector<int> best_labels;
  double best_score = 0.0;
  bool found = false;

  explicit Enumerator(const WeightedGraph& g, const EdgeFixations* f)
      : graph(g), fixations(f), n(g.node_count()), labels(n, 0) {}

  void visit(int node, int max_label, double score) {
    if (node == n) {
      // Strict improvement keeps the first maximizer, which in this
      // enumeration order is the lexicographically smallest string.
      if (!found || score > best_score) {
        best_score = score;
        best_labels = labels;
        found = true;
      }
      return;
    }
    // One pass collects the score gain of every existing cluster.
    std::vector<double> gain(max_label + 2, 0.0);
    for (int j = 0; j < node; ++j) gain[labels[j]] += graph.weight(j, node);

    for (int c = 0; c <= max_label + 1; ++c) {
      if (fixations) {
        bool ok = true;
        for (int j = 0; j < node && ok; ++j) {
          EdgeState s = fixations->get(j, node);
          if (s == EdgeState::kIncluded && labels[j] != c) ok = false;
          if (s == EdgeState::kExcluded && labels[j] == c) ok = false;
        }
        if (!ok) continue;
      }
      labels[node] = c;
      visit(node + 1, std::max(max_label, c), score + gain[c]);
    }
  }
};

Partition run(const WeightedGraph& graph, const EdgeFixations* fixations) {
  if (graph.node_count() > kOracleNodeCap)
    throw SizeError("brute force capped at " + std::to_string(kOracleNodeCap) +
                    " nodes");
  Enumerator e(graph, fixations);
  e.labels[0] = 0;
  e.visit(1, 0, graph.loop_offset());
  if (!e.found) throw Error("no partition consistent with the fixations");
  Partition p;
  p.labels = e.best_labels;
  p.score = e.best_score;
  return p;
}

}  // namespace

Partition brute_force_optimum(const WeightedGraph& graph) {
  return run(graph, nullptr);
}

Partition brute_force_optimum_constrained(const WeightedGraph& graph,
                                          const EdgeFixations& fixations) {
  return run(graph, &fixations);
}

}  // namespace cliquepart
