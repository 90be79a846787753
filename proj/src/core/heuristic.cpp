/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/heuristic.hpp"

#include <algorithm>
#include <vector>

#include "core/common.hpp"
#include "core/rng.hpp"

namespace cliquepart {

namespace {

constexpr double kMoveTol = 1e-12;
constexpr int kRestarts = 5;

// Relabels clusters to 0..k-1 in order of first appearance.
void normalize(std::vector<int>& labels) {
  std::vector<int> remap(labels.size(), -1);
  int next = 0;
  for (int& l : labels) {
    if (remap[l] == -1) remap[l] = next++;
    l = remap[l];
  }
}

// gains[v][c] = total weight between v and cluster c.
std::vector<std::vector<double>> cluster_gains(const WeightedGraph& g,
                                               const std::vector<int>& labels,
                                               int k) {
  int n = g.node_count();
  std::vector<std::vector<double>> gains(n, std::vector<double>(k, 0.0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double w = g.weight(u, v);
      if (w == 0.0) continue;
      gains[u][labels[v]] += w;
      gains[v][labels[u]] += w;
    }
  return gains;
}

}  // namespace

Partition local_search(const WeightedGraph& graph, Partition partition) {
  int n = graph.node_count();
  std::vector<int>& labels = partition.labels;
  if (static_cast<int>(labels.size()) != n)
    throw DimensionError("partition size does not match node count");
  normalize(labels);

  for (;;) {
    int k = 1 + *std::max_element(labels.begin(), labels.end());
    auto gains = cluster_gains(graph, labels, k);
    std::vector<int> size(k, 0);
    for (int l : labels) ++size[l];

    double best_delta = kMoveTol;
    int move_node = -1, move_target = -1;  // relocation (target k = new cluster)
    int merge_a = -1, merge_b = -1;

    for (int v = 0; v < n; ++v) {
      double current = gains[v][labels[v]];
      for (int c = 0; c <= k; ++c) {
        if (c == labels[v]) continue;
        if (c == k && size[labels[v]] == 1) continue;  // already a singleton
        double delta = (c < k ? gains[v][c] : 0.0) - current;
        if (delta > best_delta) {
          best_delta = delta;
          move_node = v;
          move_target = c;
          merge_a = -1;
        }
      }
    }
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        double delta = 0.0;
        for (int v = 0; v < n; ++v)
          if (labels[v] == b) delta += gains[v][a];
        if (delta > best_delta) {
          best_delta = delta;
          merge_a = a;
          merge_b = b;
          move_node = -1;
        }
      }

    if (move_node >= 0) {
      labels[move_node] = move_target;
    } else if (merge_a >= 0) {
      for (int& l : labels)
        if (l == merge_b) l = merge_a;
    } else {
      break;
    }
    normalize(labels);
  }
  partition.score = quality(graph, labels);
  return partition;
}

namespace {

// Greedy agglomeration: merge the cluster pair with the largest positive
// inter-cluster weight until none remains; ties favor the lowest pair.
Partition agglomerate(const WeightedGraph& graph) {
  int n = graph.node_count();
  Partition p;
  p.labels.resize(n);
  for (int v = 0; v < n; ++v) p.labels[v] = v;

  std::vector<std::vector<double>> between(n, std::vector<double>(n, 0.0));
  std::vector<bool> alive(n, true);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      between[u][v] = graph.weight(u, v);
      between[v][u] = between[u][v];
    }

  for (;;) {
    int best_a = -1, best_b = -1;
    double best = kMoveTol;
    for (int a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      for (int b = a + 1; b < n; ++b)
        if (alive[b] && between[a][b] > best) {
          best = between[a][b];
          best_a = a;
          best_b = b;
        }
    }
    if (best_a < 0) break;
    for (int& l : p.labels)
      if (l == best_b) l = best_a;
    alive[best_b] = false;
    for (int c = 0; c < n; ++c) {
      if (!alive[c] || c == best_a) continue;
      between[best_a][c] += between[best_b][c];
      between[c][best_a] = between[best_a][c];
    }
  }
  p.score = quality(graph, p.labels);
  return p;
}

}  // namespace

Partition initial_solution(const WeightedGraph& graph, uint64_t seed) {
  int n = graph.node_count();
  Partition best = local_search(graph, agglomerate(graph));

  Rng rng(mix_seed(seed, 0x1715));
  for (int r = 1; r < kRestarts; ++r) {
    Partition start;
    start.labels.resize(n);
    for (int v = 0; v < n; ++v)
      start.labels[v] = static_cast<int>(rng.uniform_int(0, n - 1));
    Partition candidate = local_search(graph, std::move(start));
    if (candidate.score > best.score) best = std::move(candidate);
  }
  return best;
}

}  // namespace cliquepart
