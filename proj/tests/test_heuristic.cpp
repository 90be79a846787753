/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/heuristic.hpp"

#include "core/generators.hpp"
#include "core/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cliquepart;
using test::graph_from_edges;
using test::k3_example;

TEST_CASE("all-positive graph collapses to one cluster") {
  WeightedGraph g = graph_from_edges(4, {{1, 2, 1}, {1, 3, 2}, {1, 4, 3},
                                         {2, 3, 4}, {2, 4, 5}, {3, 4, 6}});
  Partition p = initial_solution(g, 5);
  CHECK(p.score == 21.0);
  for (int v = 1; v < 4; ++v) CHECK(p.labels[v] == p.labels[0]);

  SUBCASE("merge moves alone reach it from singletons") {
    Partition singletons;
    singletons.labels = {0, 1, 2, 3};
    CHECK(local_search(g, singletons).score == 21.0);
  }
}

TEST_CASE("all-negative graph stays singletons") {
  WeightedGraph g = graph_from_edges(3, {{1, 2, -1}, {1, 3, -2}, {2, 3, -3}});
  Partition p = initial_solution(g, 5);
  CHECK(p.score == 0.0);
  CHECK((p.labels[0] != p.labels[1] && p.labels[1] != p.labels[2] &&
         p.labels[0] != p.labels[2]));
}

TEST_CASE("K3 example reaches the optimum") {
  CHECK(initial_solution(k3_example(), 1).score == 1.0);
}

TEST_CASE("local search basics") {
  WeightedGraph g = gen_set1(10, 10, 40);
  SUBCASE("score matches quality exactly") {
    Partition p = initial_solution(g, 3);
    CHECK(p.score == quality(g, p.labels));
  }
  SUBCASE("idempotent") {
    Partition once = local_search(g, initial_solution(g, 3));
    Partition twice = local_search(g, once);
    CHECK(twice.score == once.score);
  }
  SUBCASE("never below the start") {
    Partition start;
    start.labels = {0, 0, 1, 1, 2, 2, 3, 3, 4, 4};
    double before = quality(g, start.labels);
    CHECK(local_search(g, start).score >= before);
  }
  SUBCASE("optimum input is a fixed point") {
    WeightedGraph small = gen_set1(8, 5, 41);
    Partition opt = brute_force_optimum(small);
    CHECK(local_search(small, opt).score == opt.score);
  }
}

TEST_CASE("solution quality floor on random 10-node instances") {
  // Within 5% of the oracle optimum on at least 90 of 100 seeded instances.
  int good = 0, comparable = 0;
  for (uint64_t s = 0; s < 100; ++s) {
    WeightedGraph g = gen_set1(10, 10, 20000 + s);
    double opt = brute_force_optimum(g).score;
    if (opt <= 0) continue;
    ++comparable;
    double got = initial_solution(g, s).score;
    CHECK(got <= opt);
    if (got >= 0.95 * opt) ++good;
  }
  CHECK(comparable >= 95);  // heavily negative instances are rare here
  CHECK(good * 10 >= comparable * 9);
}
