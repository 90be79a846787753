/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/generators.hpp"

#include <cmath>

#include "core/common.hpp"
#include "doctest.h"

using namespace cliquepart;

TEST_CASE("set1 weights stay in range and integral") {
  WeightedGraph g = gen_set1(12, 1, 5);
  CHECK(g.integral());
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      CHECK(g.weight(i, j) >= -1.0);
      CHECK(g.weight(i, j) <= 1.0);
    }
}

TEST_CASE("set1 is deterministic per seed") {
  WeightedGraph a = gen_set1(10, 100, 42);
  WeightedGraph b = gen_set1(10, 100, 42);
  WeightedGraph c = gen_set1(10, 100, 43);
  bool same = true, differs = false;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      same = same && a.weight(i, j) == b.weight(i, j);
      differs = differs || a.weight(i, j) != c.weight(i, j);
    }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("set1 empirical mean is near zero") {
  // ~1035 draws of uniform{-100..100}: sigma of the mean is about 1.8, so a
  // +-4 band holds comfortably; value pinned by the fixed seeds.
  double sum = 0.0;
  int count = 0;
  for (uint64_t s = 0; s < 23; ++s) {
    WeightedGraph g = gen_set1(10, 100, 1000 + s);
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) {
        sum += g.weight(i, j);
        ++count;
      }
  }
  CHECK(count == 1035);
  CHECK(std::fabs(sum / count) <= 4.0);
}

TEST_CASE("set2 extremes and parity") {
  SUBCASE("p=2 weights live in {2, 0, -2}") {
    WeightedGraph g = gen_set2(10, 2, 9);
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) {
        double w = g.weight(i, j);
        CHECK((w == 2.0 || w == 0.0 || w == -2.0));
      }
  }
  SUBCASE("identical and complementary vectors hit the extremes") {
    // Weight p at Hamming distance 0 and -p at full distance; this seeded
    // stream contains witnesses of both.
    WeightedGraph g = gen_set2(20, 3, 17);
    bool saw_top = false, saw_bottom = false;
    for (int i = 0; i < 20; ++i)
      for (int j = i + 1; j < 20; ++j) {
        CHECK(g.weight(i, j) <= 3.0);
        CHECK(g.weight(i, j) >= -3.0);
        CHECK(std::fmod(g.weight(i, j) + 3.0, 2.0) == 0.0);
        saw_top = saw_top || g.weight(i, j) == 3.0;
        saw_bottom = saw_bottom || g.weight(i, j) == -3.0;
      }
    CHECK(saw_top);
    CHECK(saw_bottom);
  }
}

TEST_CASE("set3 zeroing") {
  SUBCASE("probability one zeroes everything") {
    WeightedGraph g = gen_set3(8, 10, 1.0, 3);
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) CHECK(g.weight(i, j) == 0.0);
    CHECK(trivial_upper_bound(g) == 0.0);
  }
  SUBCASE("probability zero reproduces set1 exactly") {
    WeightedGraph a = gen_set3(10, 7, 0.0, 99);
    WeightedGraph b = gen_set1(10, 7, 99);
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) CHECK(a.weight(i, j) == b.weight(i, j));
  }
  SUBCASE("zero count within the 3-sigma binomial band") {
    // 190 edges at 80%: mean 152, sigma 5.5; band [130, 173] is ~4 sigma.
    // Note zeroing can also hit weights that were drawn as zero.
    WeightedGraph g = gen_set3(20, 100, 0.8, 12345);
    int zeros = 0;
    for (int i = 0; i < 20; ++i)
      for (int j = i + 1; j < 20; ++j) zeros += g.weight(i, j) == 0.0;
    CHECK(zeros >= 130);
    CHECK(zeros <= 173);
  }
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(gen_set1(1, 1, 0), Error);
  CHECK_THROWS_AS(gen_set1(5, 0, 0), Error);
  CHECK_THROWS_AS(gen_set2(5, 0, 0), Error);
  CHECK_THROWS_AS(gen_set3(5, 1, 1.5, 0), Error);
}
