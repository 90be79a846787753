/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_BENCH_HPP
#define CLIQUEPART_CORE_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cliquepart {

// Flat key=value run description ('#' comments allowed):
//   set=set1              set1 | set2 | set3
//   n=10,11 or 10..14     instance sizes
//   param=1,2,3,5,10      q (set1/set3) or vector length p (set2)
//   zero_prob=0.8         set3 only
//   reps=5                instances per (n, param) cell
//   seed=1                master seed; per-instance seeds derive from it
//   lp_period=4  stars=0  time_limit_s=0
//   timing=1              0 writes t_ms as 0 for byte-stable output
//   jobs=1                concurrent instances; output bytes are unaffected
struct BenchConfig {
  std::string set = "set1";
  std::vector<int> ns;
  std::vector<int> params;
  double zero_prob = 0.4;
  int reps = 5;
  uint64_t seed = 1;
  int lp_period = 4;
  bool use_stars = false;
  double time_limit_s = 0.0;
  bool timing = true;
  int jobs = 1;
};

BenchConfig parse_bench_config(std::istream& in);
BenchConfig parse_bench_config_file(const std::string& path);

struct BenchOutcome {
  std::string csv;
  int instances = 0;
  int timeouts = 0;
};

// One CSV row per instance (absolute objective values), plus one aggregate
// row per n holding mean ratios against Q_opt and summed counters, ordered
// by (set, n, param, seed) regardless of the job count.
BenchOutcome run_benchmark(const BenchConfig& config);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_BENCH_HPP
