/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <algorithm>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/generators.hpp"
#include "core/lp.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cliquepart;
using test::graph_from_edges;
using test::k3_example;
using test::unit_star_example;

TEST_CASE("simplex basics") {
  SUBCASE("single bounded variable") {
    LpProblem p;
    p.objective = {1.0};
    p.lower = {0.0};
    p.upper = {kInf};
    p.rows.push_back({{{0, 1.0}}, 5.0});
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.value == doctest::Approx(5.0));
    CHECK(s.assignment[0] == doctest::Approx(5.0));
  }
  SUBCASE("two variables in [0,1] sharing one unit of capacity") {
    LpProblem p;
    p.objective = {1.0, 1.0};
    p.lower = {0.0, 0.0};
    p.upper = {1.0, 1.0};
    p.rows.push_back({{{0, 1.0}, {1, 1.0}}, 1.0});
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.value == doctest::Approx(1.0));
  }
  SUBCASE("unbounded") {
    LpProblem p;
    p.objective = {1.0, 1.0};
    p.lower = {0.0, 0.0};
    p.upper = {kInf, kInf};
    p.rows.push_back({{{0, 1.0}}, 5.0});  // nothing restrains x1
    CHECK(solve_lp(p).status == LpStatus::kUnbounded);
  }
  SUBCASE("no rows, finite bounds") {
    LpProblem p;
    p.objective = {2.0, -1.0};
    p.lower = {0.0, 0.0};
    p.upper = {3.0, 7.0};
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.value == doctest::Approx(6.0));
    CHECK(s.assignment[1] == 0.0);
  }
  SUBCASE("empty problem") {
    LpSolution s = solve_lp(LpProblem{});
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.value == 0.0);
  }
  SUBCASE("degenerate diamond") {
    // Several optimal bases; exercises tie-breaking determinism.
    LpProblem p;
    p.objective = {1.0, 1.0};
    p.lower = {0.0, 0.0};
    p.upper = {kInf, kInf};
    p.rows.push_back({{{0, 1.0}, {1, 1.0}}, 2.0});
    p.rows.push_back({{{0, 1.0}}, 1.0});
    p.rows.push_back({{{1, 1.0}}, 1.0});
    p.rows.push_back({{{0, 1.0}, {1, 1.0}}, 2.0});
    LpSolution a = solve_lp(p);
    LpSolution b = solve_lp(p);
    REQUIRE(a.status == LpStatus::kOptimal);
    CHECK(a.value == doctest::Approx(2.0));
    CHECK(a.assignment == b.assignment);
  }
}

TEST_CASE("penalty LP on the K3 example") {
  WeightedGraph g = k3_example();
  EdgeFixations none(3);
  auto chains = enumerate_chains(g, none, 4);
  PenaltyLp lp = build_penalty_lp(g, chains, none);
  REQUIRE(lp.columns.size() == 1);
  REQUIRE(lp.problem.rows.size() == 3);
  std::vector<double> rhs;
  for (const LpRow& row : lp.problem.rows) rhs.push_back(row.rhs);
  std::sort(rhs.begin(), rhs.end());
  CHECK(rhs == std::vector<double>{1.0, 1.0, 2.0});
  LpSolution s = solve_lp(lp.problem);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == doctest::Approx(1.0));
  CHECK(s.assignment[0] == doctest::Approx(1.0));
}

TEST_CASE("penalty LP: empty subnetwork set") {
  WeightedGraph g = k3_example();
  EdgeFixations none(3);
  PenaltyLp lp = build_penalty_lp(g, {}, none);
  CHECK(lp.problem.objective.empty());
  LpSolution s = solve_lp(lp.problem);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == 0.0);
}

TEST_CASE("penalty LP: shared capacity splits") {
  // Two chains, penalties 2 and 2, through a shared edge of capacity 2: the
  // optimum splits the capacity for a total of 2.
  WeightedGraph h = graph_from_edges(
      4, {{1, 2, 2}, {2, 3, 3}, {1, 3, -2}, {2, 4, 5}, {1, 4, -2}});
  EdgeFixations none(4);
  auto a = make_chain({0, 1, 2}, h, none);
  auto b = make_chain({0, 1, 3}, h, none);
  REQUIRE(a);
  REQUIRE(b);
  PenaltyLp lp = build_penalty_lp(h, {*a, *b}, none);
  LpSolution s = solve_lp(lp.problem);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == doctest::Approx(2.0));
}

TEST_CASE("penalty LP honors fixations") {
  WeightedGraph g = k3_example();
  EdgeFixations none(3);
  auto chains = enumerate_chains(g, none, 4);
  REQUIRE(chains.size() == 1);

  SUBCASE("chain with an excluded positive edge is dropped") {
    EdgeFixations f(3);
    f.set(0, 1, EdgeState::kExcluded);
    PenaltyLp lp = build_penalty_lp(g, chains, f);
    CHECK(lp.columns.empty());
  }
  SUBCASE("chain with an included negative edge is dropped") {
    EdgeFixations f(3);
    f.set(1, 2, EdgeState::kIncluded);
    PenaltyLp lp = build_penalty_lp(g, chains, f);
    CHECK(lp.columns.empty());
  }
  SUBCASE("included positive edge loses its capacity row") {
    EdgeFixations f(3);
    f.set(0, 1, EdgeState::kIncluded);
    PenaltyLp lp = build_penalty_lp(g, chains, f);
    REQUIRE(lp.columns.size() == 1);
    CHECK(lp.problem.rows.size() == 2);
  }
}

TEST_CASE("penalty LP optimum is monotone in the subnetwork set") {
  Rng rng(88);
  for (uint64_t s = 0; s < 5; ++s) {
    WeightedGraph g = gen_set1(8, 5, 7000 + s);
    EdgeFixations none(8);
    auto chains = enumerate_chains(g, none, 4);
    if (chains.empty()) continue;
    size_t half = chains.size() / 2;
    std::vector<Subnetwork> some(chains.begin(), chains.begin() + half);
    double p_some = solve_lp(build_penalty_lp(g, some, none).problem).value;
    double p_all = solve_lp(build_penalty_lp(g, chains, none).problem).value;
    CHECK(p_all >= p_some - 1e-9);
  }
}

TEST_CASE("penalty LP duals certify the optimum") {
  // Weak duality spot check: any feasible dual gives an upper bound on the
  // primal optimum; the simplex value must not exceed sum(rhs * dual) for
  // the dual recovered from a feasibility-checked candidate.
  for (uint64_t s = 0; s < 5; ++s) {
    WeightedGraph g = gen_set1(7, 4, 300 + s);
    EdgeFixations none(7);
    auto chains = enumerate_chains(g, none, 4);
    PenaltyLp lp = build_penalty_lp(g, chains, none);
    if (lp.columns.empty()) continue;
    LpSolution primal = solve_lp(lp.problem);
    REQUIRE(primal.status == LpStatus::kOptimal);

    // Uniform dual candidate y_r = t, scaled until feasible:
    // sum_r y_r a_rj >= c_j for every column.
    double t = 0.0;
    for (size_t j = 0; j < lp.columns.size(); ++j) {
      double col_sum = 0.0;
      for (const LpRow& row : lp.problem.rows)
        for (auto [col, coeff] : row.coeffs)
          if (col == static_cast<int>(j)) col_sum += coeff;
      if (col_sum > 0) t = std::max(t, lp.problem.objective[j] / col_sum);
    }
    double dual_value = 0.0;
    for (const LpRow& row : lp.problem.rows) dual_value += row.rhs * t;
    CHECK(primal.value <= dual_value + 1e-7);
  }
}

TEST_CASE("relaxed ILP bounds") {
  SUBCASE("K3: relaxation reaches the optimum (chain-shaped instance)") {
    CHECK(relaxed_upper_bound(k3_example()) == doctest::Approx(1.0));
  }
  SUBCASE("all-positive graph: every variable at one") {
    WeightedGraph g = graph_from_edges(4, {{1, 2, 1}, {1, 3, 2}, {1, 4, 3},
                                           {2, 3, 4}, {2, 4, 5}, {3, 4, 6}});
    CHECK(relaxed_upper_bound(g) == doctest::Approx(21.0));
  }
  SUBCASE("unit star: relaxation leaves a 1.5 gap") {
    WeightedGraph g = unit_star_example();
    CHECK(relaxed_upper_bound(g) ==
          doctest::Approx(trivial_upper_bound(g) - 1.5).epsilon(1e-9));
  }
  SUBCASE("node cap") {
    CHECK_THROWS_AS(build_relaxed_ilp(WeightedGraph(41)), SizeError);
  }
}

TEST_CASE("relaxation is exact on pure chains") {
  // Chains of every length 3..8 with random integer weights.
  Rng rng(1212);
  for (int k = 3; k <= 8; ++k) {
    for (int t = 0; t < 4; ++t) {
      WeightedGraph g(k);
      for (int i = 0; i + 1 < k; ++i)
        g.set_weight(i, i + 1, static_cast<double>(rng.uniform_int(1, 10)));
      g.set_weight(0, k - 1, -static_cast<double>(rng.uniform_int(1, 10)));
      CHECK(relaxed_upper_bound(g) ==
            doctest::Approx(brute_force_optimum(g).score).epsilon(1e-9));
    }
  }
}

TEST_CASE("relaxation never trails the chain bound") {
  for (uint64_t s = 0; s < 6; ++s) {
    WeightedGraph g = gen_set1(8, 5, 60 + s);
    EdgeFixations none(8);
    auto chains = enumerate_chains(g, none, 4);
    double p_chains = solve_lp(build_penalty_lp(g, chains, none).problem).value;
    CHECK(relaxed_upper_bound(g) <=
          trivial_upper_bound(g) - p_chains + 1e-7);
  }
}

TEST_CASE("optimal solutions are primal feasible") {
  for (uint64_t s = 0; s < 4; ++s) {
    WeightedGraph g = gen_set1(8, 10, 4400 + s);
    EdgeFixations none(8);
    for (const LpProblem& problem :
         {build_penalty_lp(g, enumerate_chains(g, none, 4), none).problem,
          build_relaxed_ilp(g)}) {
      LpSolution sol = solve_lp(problem);
      REQUIRE(sol.status == LpStatus::kOptimal);
      for (const LpRow& row : problem.rows) {
        double lhs = 0.0;
        for (auto [j, a] : row.coeffs) lhs += a * sol.assignment[j];
        CHECK(lhs <= row.rhs + 1e-7);
      }
      for (size_t j = 0; j < sol.assignment.size(); ++j) {
        CHECK(sol.assignment[j] >= problem.lower[j] - 1e-7);
        CHECK(sol.assignment[j] <= problem.upper[j] + 1e-7);
      }
      double value = 0.0;
      for (size_t j = 0; j < sol.assignment.size(); ++j)
        value += problem.objective[j] * sol.assignment[j];
      CHECK(sol.value == doctest::Approx(value).epsilon(1e-7));
    }
  }
}

TEST_CASE("LP text dump") {
  LpProblem p;
  p.objective = {3.0, 0.0};
  p.lower = {0.0, 0.0};
  p.upper = {kInf, 1.0};
  p.rows.push_back({{{0, 1.0}, {1, 2.0}}, 5.0});
  std::string text = dump_lp(p);
  CHECK(text.find("max: 3 x0") != std::string::npos);
  CHECK(text.find("r0: 1 x0 + 2 x1 <= 5") != std::string::npos);
  CHECK(text.find("0 <= x0 <= inf") != std::string::npos);
  CHECK(text.find("0 <= x1 <= 1") != std::string::npos);
}
