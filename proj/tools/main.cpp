/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Command line front end; talks to the solver exclusively through the C API.
 */
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliquepart/cliquepart.h"

namespace {

// Exit codes: 0 success, 1 usage, 2 i/o, 3 timeout.
int exit_code(cpart_status status) {
  switch (status) {
    case CPART_OK: return 0;
    case CPART_ERROR_IO:
    case CPART_ERROR_PARSE: return 2;
    case CPART_ERROR_TIMEOUT: return 3;
    default: return 1;
  }
}

int report_failure(cpart_status status) {
  std::fprintf(stderr, "error: %s", cpart_status_name(status));
  const char* detail = cpart_last_error();
  if (detail && detail[0]) std::fprintf(stderr, " (%s)", detail);
  std::fprintf(stderr, "\n");
  return exit_code(status);
}

struct GraphHandle {
  cpart_graph* g = nullptr;
  ~GraphHandle() { cpart_graph_free(g); }
};

struct ReportHandle {
  cpart_report* r = nullptr;
  ~ReportHandle() { cpart_report_free(r); }
};

void print_partition(const cpart_graph* g, const std::vector<int>& labels) {
  int n = cpart_graph_node_count(g);
  int clusters = 0;
  for (int l : labels) clusters = std::max(clusters, l + 1);
  std::printf("clusters: %d\n", clusters);
  for (int c = 0; c < clusters; ++c) {
    std::printf(" ");
    for (int v = 0; v < n; ++v)
      if (labels[v] == c) std::printf(" %d", v + 1);
    std::printf("\n");
  }
}

int run_solve(const std::string& file, const cpart_options& options) {
  GraphHandle graph;
  if (cpart_status s = cpart_graph_load(file.c_str(), &graph.g))
    return report_failure(s);
  ReportHandle report;
  cpart_status s = cpart_solve(graph.g, &options, &report.r);
  if (s != CPART_OK && s != CPART_ERROR_TIMEOUT) return report_failure(s);

  int n = cpart_graph_node_count(graph.g);
  std::printf("n: %d\n", n);
  std::printf("Q_trivial: %.10g\n", cpart_report_q_trivial(report.r));
  std::printf("Q_min (initial): %.10g\n", cpart_report_q_initial(report.r));
  std::printf("Q_max (root bound): %.10g\n", cpart_report_root_bound(report.r));
  std::printf("Q_opt: %.10g%s\n", cpart_report_q_opt(report.r),
              cpart_report_timed_out(report.r) ? " (incumbent, timed out)" : "");
  std::printf("nodes: %lld\n",
              static_cast<long long>(cpart_report_nodes(report.r)));
  std::printf("lp_solves: %lld\n",
              static_cast<long long>(cpart_report_lp_solves(report.r)));
  std::printf("heuristic_solves: %lld\n",
              static_cast<long long>(cpart_report_heuristic_solves(report.r)));
  std::printf("time_ms: %.3f\n", cpart_report_time_ms(report.r));
  std::vector<int> labels(n);
  cpart_report_labels(report.r, labels.data());
  print_partition(graph.g, labels);
  return s == CPART_ERROR_TIMEOUT ? 3 : 0;
}

int run_bound(const std::string& file, const cpart_options& options,
              bool relaxed, const std::string& dump_path) {
  GraphHandle graph;
  if (cpart_status s = cpart_graph_load(file.c_str(), &graph.g))
    return report_failure(s);
  double penalty = 0.0, bound = 0.0;
  if (cpart_status s = cpart_root_bound(graph.g, &options, &penalty, &bound))
    return report_failure(s);
  std::printf("Q_trivial: %.10g\n", cpart_graph_trivial_bound(graph.g));
  std::printf("penalty: %.10g\n", penalty);
  std::printf("Q_max: %.10g\n", bound);
  if (relaxed) {
    double r = 0.0;
    if (cpart_status s = cpart_relaxed_bound(graph.g, &r))
      return report_failure(s);
    std::printf("Q_relaxed: %.10g\n", r);
  }
  if (!dump_path.empty()) {
    if (cpart_status s = cpart_penalty_lp_dump(graph.g, options.use_stars,
                                               dump_path.c_str()))
      return report_failure(s);
    std::printf("lp written to %s\n", dump_path.c_str());
  }
  return 0;
}

int run_labels_command(const std::string& file, bool oracle, uint64_t seed) {
  GraphHandle graph;
  if (cpart_status s = cpart_graph_load(file.c_str(), &graph.g))
    return report_failure(s);
  int n = cpart_graph_node_count(graph.g);
  std::vector<int> labels(n);
  double score = 0.0;
  cpart_status s = oracle
                       ? cpart_oracle(graph.g, labels.data(), &score)
                       : cpart_initial_solution(graph.g, seed, labels.data(), &score);
  if (s != CPART_OK) return report_failure(s);
  std::printf("%s: %.10g\n", oracle ? "Q_opt" : "Q", score);
  print_partition(graph.g, labels);
  return 0;
}

int run_gen(const std::string& set, int n, int param, double zero_prob,
            uint64_t seed, const std::string& out_path) {
  GraphHandle graph;
  if (cpart_status s = cpart_graph_generate(set.c_str(), n, param, zero_prob,
                                            seed, &graph.g))
    return report_failure(s);
  if (out_path.empty()) {
    char* text = nullptr;
    if (cpart_status s = cpart_graph_save_string(graph.g, &text))
      return report_failure(s);
    std::fputs(text, stdout);
    cpart_string_free(text);
  } else {
    if (cpart_status s = cpart_graph_save(graph.g, out_path.c_str()))
      return report_failure(s);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliquepart: exact clique partitioning solver"};
  app.require_subcommand(1);

  cpart_options options;
  cpart_options_init(&options);

  std::string file, out_path, dump_path, set;
  int n = 10, param = 1;
  double zero_prob = 0.0;
  bool relaxed = false;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", options.seed, "random seed");
    cmd->add_option("--lp-period", options.lp_period,
                    "solve the LP bound every this many tree levels");
    cmd->add_flag("--stars", options.use_stars,
                  "include star subnetworks in the root bound");
    cmd->add_option("--time-limit-s", options.time_limit_s,
                    "wall time limit in seconds (0: none)");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve an instance exactly");
  solve->add_option("file", file, "graph file")->required();
  add_solver_flags(solve);

  CLI::App* bound = app.add_subcommand("bound", "root upper bound only");
  bound->add_option("file", file, "graph file")->required();
  bound->add_flag("--stars", options.use_stars,
                  "include star subnetworks in the bound");
  bound->add_flag("--relaxed", relaxed,
                  "also report the relaxed integer formulation bound");
  bound->add_option("--dump-lp", dump_path, "write the penalty LP to a file");

  CLI::App* heur = app.add_subcommand("heur", "heuristic solution only");
  heur->add_option("file", file, "graph file")->required();
  heur->add_option("--seed", options.seed, "random seed");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force optimum (n <= 13)");
  oracle->add_option("file", file, "graph file")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("set", set, "set1 | set2 | set3")->required();
  gen->add_option("--n", n, "node count")->required();
  gen->add_option("--param", param, "q (set1/set3) or vector length p (set2)")
      ->required();
  gen->add_option("--zero-prob", zero_prob, "zeroing probability (set3)");
  gen->add_option("--seed", options.seed, "random seed")->required();
  gen->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* bench = app.add_subcommand("bench", "run a benchmark config");
  bench->add_option("config", file, "key=value config file")->required();
  bench->add_option("--out", out_path, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (solve->parsed()) return run_solve(file, options);
  if (bound->parsed()) return run_bound(file, options, relaxed, dump_path);
  if (heur->parsed()) return run_labels_command(file, false, options.seed);
  if (oracle->parsed()) return run_labels_command(file, true, options.seed);
  if (gen->parsed())
    return run_gen(set, n, param, zero_prob, options.seed, out_path);
  if (bench->parsed()) {
    cpart_status s = cpart_run_benchmark(file.c_str(), out_path.c_str());
    if (s != CPART_OK) return report_failure(s);
    return 0;
  }
  return 1;
}
