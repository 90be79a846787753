/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_GRAPH_HPP
#define CLIQUEPART_CORE_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquepart {

// Complete undirected weighted graph. Self-loop weights are folded into a
// partition-independent constant at ingestion; the optimization model only
// ever sees the off-diagonal weights. Immutable by convention once built,
// safe to share across threads.
class WeightedGraph {
 public:
  explicit WeightedGraph(int n);

  int node_count() const { return n_; }

  double weight(int i, int j) const { return w_[idx(i, j)]; }
  void set_weight(int i, int j, double w);

  double loop_offset() const { return loop_offset_; }
  void add_loop_weight(double w) { loop_offset_ += w; }

  double positive_weight_sum() const;

  // True when every pair weight and the loop offset are integers; enables
  // integer fathoming in the search.
  bool integral() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }

  int n_;
  double loop_offset_ = 0.0;
  std::vector<double> w_;
};

// Cluster assignment per node plus its quality score. Labels are arbitrary;
// only equality of labels is meaningful.
struct Partition {
  std::vector<int> labels;
  double score = 0.0;
};

// Objective value of a partition: loop offset plus the sum of weights of
// intra-cluster pairs.
double quality(const WeightedGraph& graph, const std::vector<int>& labels);

// Sum of all positive edge weights plus the loop offset (loops are included
// under every partition, so positive loops count toward the bound and
// negative loops reduce it).
double trivial_upper_bound(const WeightedGraph& graph);

// Directed weighted network used as modularity input. Absent arcs are zero.
class DirectedNetwork {
 public:
  explicit DirectedNetwork(int n)
      : n_(n), arcs_(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0) {}

  int node_count() const { return n_; }
  double arc(int i, int j) const { return arcs_[idx(i, j)]; }
  void set_arc(int i, int j, double w) { arcs_[idx(i, j)] = w; }
  void add_arc(int i, int j, double w) { arcs_[idx(i, j)] += w; }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }

  int n_;
  std::vector<double> arcs_;
};

// Modularity maximization as a clique partitioning instance: pair weights
// combine both arc directions and the degree-product null model; diagonal
// terms land in the loop offset, so quality(transform, C) equals the
// modularity of C for every partition.
WeightedGraph modularity_to_cpp(const DirectedNetwork& net);

// Text format: '#' starts a comment, first payload line is the node count,
// then "i j w" lines with 1-based indices; "i i w" folds into the loop
// offset; unspecified pairs are zero.
WeightedGraph load_graph(std::istream& in);
WeightedGraph load_graph_string(const std::string& text);
WeightedGraph load_graph_file(const std::string& path);

// Canonical form: ascending (i, j), zero weights omitted, loop offset (when
// nonzero) saved as a "1 1 w" line. Weights print with shortest round-trip
// formatting, so load(save(g)) reproduces g bit-exactly.
std::string save_graph(const WeightedGraph& graph);
void save_graph_file(const WeightedGraph& graph, const std::string& path);

// Shortest round-trip decimal form of v (also used by the CSV writer).
std::string format_double(double v);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_GRAPH_HPP
