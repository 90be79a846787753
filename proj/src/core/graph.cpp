/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/graph.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

#include "core/common.hpp"

namespace cliquepart {

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n < 1) throw DimensionError("node count must be at least 1");
  w_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
}

void WeightedGraph::set_weight(int i, int j, double w) {
  if (i == j) throw DimensionError("pair weight requires two distinct nodes");
  w_[idx(i, j)] = w;
  w_[idx(j, i)] = w;
}

double WeightedGraph::positive_weight_sum() const {
  double sum = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (weight(i, j) > 0) sum += weight(i, j);
  return sum;
}

bool WeightedGraph::integral() const {
  auto is_int = [](double v) { return std::floor(v) == v && std::isfinite(v); };
  if (!is_int(loop_offset_)) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!is_int(weight(i, j))) return false;
  return true;
}

double quality(const WeightedGraph& graph, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != graph.node_count())
    throw DimensionError("partition size does not match node count");
  double q = graph.loop_offset();
  int n = graph.node_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) q += graph.weight(i, j);
  return q;
}

double trivial_upper_bound(const WeightedGraph& graph) {
  return graph.positive_weight_sum() + graph.loop_offset();
}

WeightedGraph modularity_to_cpp(const DirectedNetwork& net) {
  int n = net.node_count();
  double total = 0.0;
  std::vector<double> s_in(n, 0.0), s_out(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double a = net.arc(i, j);
      total += a;
      s_in[i] += a;
      s_out[j] += a;
    }
  if (total == 0.0) throw Error("degenerate network: total arc weight is zero");

  WeightedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double w = net.arc(i, j) / total - s_in[i] * s_out[j] / (total * total) +
                 net.arc(j, i) / total - s_in[j] * s_out[i] / (total * total);
      g.set_weight(i, j, w);
    }
    g.add_loop_weight(net.arc(i, i) / total -
                      s_in[i] * s_out[i] / (total * total));
  }
  return g;
}

namespace {

// Strips a trailing comment and surrounding whitespace.
std::string clean_line(const std::string& raw) {
  std::string s = raw;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

WeightedGraph load_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  // (i, j) -> weight, used only for duplicate detection.
  std::map<std::pair<int, int>, double> seen;
  WeightedGraph graph(1);

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = clean_line(raw);
    if (line.empty()) continue;

    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 1)
        throw ParseError(line_no, "expected positive node count, got '" + line + "'");
      std::string extra;
      if (fields >> extra)
        throw ParseError(line_no, "unexpected token after node count: '" + extra + "'");
      graph = WeightedGraph(n);
      continue;
    }

    int i = 0, j = 0;
    double w = 0.0;
    if (!(fields >> i >> j >> w))
      throw ParseError(line_no, "expected 'i j w', got '" + line + "'");
    std::string extra;
    if (fields >> extra)
      throw ParseError(line_no, "unexpected token: '" + extra + "'");
    if (i < 1 || i > n || j < 1 || j > n)
      throw ParseError(line_no, "node index out of range [1, " + std::to_string(n) + "]");

    if (i == j) {
      graph.add_loop_weight(w);
      continue;
    }
    int a = std::min(i, j) - 1, b = std::max(i, j) - 1;
    auto [it, inserted] = seen.emplace(std::make_pair(a, b), w);
    if (!inserted) {
      if (it->second != w)
        throw ParseError(line_no, "conflicting duplicate weight for pair (" +
                                      std::to_string(a + 1) + ", " +
                                      std::to_string(b + 1) + ")");
      continue;
    }
    graph.set_weight(a, b, w);
  }
  if (n < 0) throw ParseError(line_no, "missing node count header");
  return graph;
}

WeightedGraph load_graph_string(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

WeightedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  return load_graph(in);
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string save_graph(const WeightedGraph& graph) {
  std::ostringstream out;
  int n = graph.node_count();
  out << n << '\n';
  if (graph.loop_offset() != 0.0)
    out << "1 1 " << format_double(graph.loop_offset()) << '\n';
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (graph.weight(i, j) != 0.0)
        out << (i + 1) << ' ' << (j + 1) << ' '
            << format_double(graph.weight(i, j)) << '\n';
  return out.str();
}

void save_graph_file(const WeightedGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << save_graph(graph);
  if (!out) throw IoError("failed writing graph file: " + path);
}

}  // namespace cliquepart
