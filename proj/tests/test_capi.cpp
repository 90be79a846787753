/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "cliquepart/cliquepart.h"
#include "doctest.h"

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path("capi_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("c api: load, inspect, save round trip") {
  cpart_graph* g = nullptr;
  REQUIRE(cpart_graph_load_string("3\n1 2 1\n1 3 1\n2 3 -2\n", &g) == CPART_OK);
  CHECK(cpart_graph_node_count(g) == 3);
  CHECK(cpart_graph_weight(g, 0, 1) == 1.0);
  CHECK(cpart_graph_weight(g, 1, 2) == -2.0);
  CHECK(cpart_graph_is_integral(g) == 1);
  CHECK(cpart_graph_trivial_bound(g) == 2.0);
  CHECK(cpart_graph_loop_offset(g) == 0.0);

  char* text = nullptr;
  REQUIRE(cpart_graph_save_string(g, &text) == CPART_OK);
  cpart_graph* back = nullptr;
  REQUIRE(cpart_graph_load_string(text, &back) == CPART_OK);
  CHECK(cpart_graph_weight(back, 0, 2) == 1.0);
  cpart_string_free(text);
  cpart_graph_free(back);
  cpart_graph_free(g);
}

TEST_CASE("c api: errors carry status and detail") {
  cpart_graph* g = nullptr;
  CHECK(cpart_graph_load_string("3\n1 9 1\n", &g) == CPART_ERROR_PARSE);
  CHECK(std::string(cpart_last_error()).find("line 2") != std::string::npos);
  CHECK(cpart_graph_load("/no/such/file.graph", &g) == CPART_ERROR_IO);
  CHECK(cpart_graph_load(nullptr, &g) == CPART_ERROR_INVALID_ARGUMENT);
  CHECK(cpart_graph_generate("set9", 5, 1, 0, 1, &g) ==
        CPART_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(cpart_status_name(CPART_ERROR_PARSE)) == "parse error");
}

TEST_CASE("c api: solve and report") {
  cpart_graph* g = nullptr;
  REQUIRE(cpart_graph_generate("set1", 9, 10, 0, 31, &g) == CPART_OK);

  cpart_options options;
  cpart_options_init(&options);
  CHECK(options.lp_period == 4);

  cpart_report* report = nullptr;
  REQUIRE(cpart_solve(g, &options, &report) == CPART_OK);
  CHECK(cpart_report_timed_out(report) == 0);

  int n = cpart_graph_node_count(g);
  std::vector<int> labels(n);
  REQUIRE(cpart_report_labels(report, labels.data()) == CPART_OK);
  double q = 0.0;
  REQUIRE(cpart_quality(g, labels.data(), &q) == CPART_OK);
  CHECK(q == cpart_report_q_opt(report));
  CHECK(cpart_report_q_trivial(report) >= cpart_report_root_bound(report));
  CHECK(cpart_report_root_bound(report) >= cpart_report_q_opt(report) - 1e-6);
  CHECK(cpart_report_q_initial(report) <= cpart_report_q_opt(report));

  // The exhaustive reference agrees.
  std::vector<int> oracle_labels(n);
  double oracle_score = 0.0;
  REQUIRE(cpart_oracle(g, oracle_labels.data(), &oracle_score) == CPART_OK);
  CHECK(oracle_score == cpart_report_q_opt(report));

  cpart_report_free(report);
  cpart_graph_free(g);
}

TEST_CASE("c api: bounds and heuristics") {
  cpart_graph* g = nullptr;
  REQUIRE(cpart_graph_load_string("3\n1 2 1\n1 3 1\n2 3 -2\n", &g) == CPART_OK);

  double penalty = 0.0, bound = 0.0;
  REQUIRE(cpart_root_bound(g, nullptr, &penalty, &bound) == CPART_OK);
  CHECK(penalty == doctest::Approx(1.0));
  CHECK(bound == doctest::Approx(1.0));

  double relaxed = 0.0;
  REQUIRE(cpart_relaxed_bound(g, &relaxed) == CPART_OK);
  CHECK(relaxed == doctest::Approx(1.0));

  int labels[3];
  double score = 0.0;
  REQUIRE(cpart_initial_solution(g, 7, labels, &score) == CPART_OK);
  CHECK(score == 1.0);

  TempFile lp("penalty.lp");
  REQUIRE(cpart_penalty_lp_dump(g, 0, lp.path.c_str()) == CPART_OK);
  std::ifstream in(lp.path);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("max:", 0) == 0);

  cpart_graph_free(g);
}

TEST_CASE("c api: oracle size cap") {
  cpart_graph* g = nullptr;
  REQUIRE(cpart_graph_generate("set1", 14, 1, 0, 1, &g) == CPART_OK);
  std::vector<int> labels(14);
  double score = 0.0;
  CHECK(cpart_oracle(g, labels.data(), &score) == CPART_ERROR_TOO_LARGE);
  cpart_graph_free(g);
}

TEST_CASE("c api: benchmark run") {
  TempFile cfg("bench.cfg"), csv("bench.csv");
  {
    std::ofstream out(cfg.path);
    out << "set=set1\nn=6\nparam=2\nreps=2\nseed=9\ntiming=0\n";
  }
  REQUIRE(cpart_run_benchmark(cfg.path.c_str(), csv.path.c_str()) == CPART_OK);
  std::ifstream in(csv.path);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "set,n,param,seed,Q_trivial,Q_min,Q_max,Q_opt,nodes,lp_solves,t_ms,status");
  CHECK(cpart_run_benchmark("/no/such/config", csv.path.c_str()) ==
        CPART_ERROR_IO);
}
