/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "core/bound.hpp"
#include "core/common.hpp"
#include "core/fixation.hpp"
#include "core/heuristic.hpp"
#include "core/rng.hpp"
#include "core/subnetwork.hpp"

namespace cliquepart {

std::vector<std::pair<int, int>> order_positive_edges(const WeightedGraph& graph) {
  std::vector<std::pair<int, int>> edges;
  int n = graph.node_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (graph.weight(i, j) > 0) edges.push_back({i, j});
  std::stable_sort(edges.begin(), edges.end(),
                   [&](const auto& a, const auto& b) {
                     return graph.weight(a.first, a.second) >
                            graph.weight(b.first, b.second);
                   });
  return edges;
}

namespace {

using Clock = std::chrono::steady_clock;

// Seed salts for the independent random streams of one run.
constexpr uint64_t kSaltInitial = 0x01;
constexpr uint64_t kSaltRootHeuristic = 0x10;  // +attempt
constexpr uint64_t kSaltTree = 0x20;

class Searcher {
 public:
  Searcher(const WeightedGraph& graph, const SolveConfig& config)
      : graph_(graph),
        config_(config),
        integral_(graph.integral()),
        trivial_(trivial_upper_bound(graph)),
        tree_rng_(mix_seed(config.seed, kSaltTree)) {
    if (config.lp_period < 1) throw Error("lp_period must be at least 1");
  }

  SolveReport run() {
    auto start = Clock::now();
    if (config_.time_limit_s > 0)
      deadline_ = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(config_.time_limit_s));
    has_deadline_ = config_.time_limit_s > 0;

    SolveReport report;
    report.q_trivial = trivial_;
    incumbent_ = initial_solution(graph_, mix_seed(config_.seed, kSaltInitial));
    report.q_initial = incumbent_.score;

    int n = graph_.node_count();
    EdgeFixations root(n);
    double root_bound = kInf;
    std::vector<Subnetwork> chains;
    bool proven = false;

    // A hit from the cheap bound skips the LP entirely.
    for (uint64_t attempt = 0; attempt < 3 && !proven && !out_of_time(); ++attempt) {
      Rng rng(mix_seed(config_.seed, kSaltRootHeuristic + attempt));
      BoundResult br = calc_penalty_heuristic(graph_, root, {}, rng);
      ++stats_.heuristic_solves;
      root_bound = std::min(root_bound, br.upper_bound);
      proven = !can_beat(br.upper_bound);
    }
    if (!proven && !out_of_time()) {
      BoundResult br = calc_penalty_lp(graph_, root, config_.use_stars, {},
                                       tree_rng_);
      ++stats_.lp_solves;
      root_bound = std::min(root_bound, br.upper_bound);
      proven = !can_beat(br.upper_bound);
      chains = carryover_chains(br.model);
    }

    report.root_bound = root_bound < kInf ? root_bound : trivial_;
    report.proved_at_root = proven;
    if (!proven && !out_of_time()) {
      order_ = order_positive_edges(graph_);
      recurse(0, root, chains, 1);
    }

    report.best = incumbent_;
    report.timed_out = timed_out_;
    report.stats = stats_;
    report.stats.time_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
  }

 private:
  // Whether a subtree with this upper bound can still improve the incumbent.
  // Integral graphs admit integer rounding of the bound.
  bool can_beat(double bound) const {
    if (integral_)
      return std::floor(bound + kBoundEps) > incumbent_.score + 0.5;
    return bound > incumbent_.score + kBoundEps;
  }

  bool out_of_time() {
    if (timed_out_) return true;
    if (has_deadline_ && Clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  // Clusters are the connected components of included edges; everything
  // still free at a leaf is negative or zero and gets excluded.
  Partition leaf_partition(const EdgeFixations& fixations) const {
    int n = graph_.node_count();
    Partition p;
    p.labels.assign(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
      if (p.labels[s] != -1) continue;
      p.labels[s] = next;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
          if (p.labels[v] == -1 && v != u &&
              fixations.get(u, v) == EdgeState::kIncluded) {
            p.labels[v] = next;
            stack.push_back(v);
          }
      }
      ++next;
    }
    p.score = quality(graph_, p.labels);
    return p;
  }

  void recurse(size_t cursor, const EdgeFixations& fixations,
               const std::vector<Subnetwork>& chains, int depth) {
    if (out_of_time()) return;
    ++stats_.nodes;

    while (cursor < order_.size() &&
           !fixations.is_free(order_[cursor].first, order_[cursor].second))
      ++cursor;
    if (cursor >= order_.size()) {
      Partition leaf = leaf_partition(fixations);
      if (leaf.score > incumbent_.score) incumbent_ = std::move(leaf);
      return;
    }

    auto [u, v] = order_[cursor];
    for (bool include : {true, false}) {
      if (out_of_time()) return;
      auto next = propagate_transitivity(fixations, u, v, include);
      if (!next) continue;  // contradiction fathoms the branch

      BoundResult br;
      if (depth % config_.lp_period == 0) {
        br = calc_penalty_lp(graph_, *next, false, chains, tree_rng_);
        ++stats_.lp_solves;
        if (br.lp_fallback) ++stats_.heuristic_solves;
      } else {
        br = calc_penalty_heuristic(graph_, *next, chains, tree_rng_);
        ++stats_.heuristic_solves;
      }
      if (can_beat(br.upper_bound))
        recurse(cursor + 1, *next, carryover_chains(br.model), depth + 1);
    }
  }

  const WeightedGraph& graph_;
  const SolveConfig& config_;
  bool integral_;
  double trivial_;
  Rng tree_rng_;
  std::vector<std::pair<int, int>> order_;
  Partition incumbent_;
  SolveStats stats_;
  Clock::time_point deadline_{};
  bool has_deadline_ = false;
  bool timed_out_ = false;
};

}  // namespace

SolveReport branch_and_bound(const WeightedGraph& graph, const SolveConfig& config) {
  return Searcher(graph, config).run();
}

}  // namespace cliquepart
