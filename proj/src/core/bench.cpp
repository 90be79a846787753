/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/bench.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "core/common.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "core/search.hpp"

namespace cliquepart {

namespace {

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// "3", "1,2,5" and "10..14" forms.
std::vector<int> parse_int_list(const std::string& text, int line) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    auto dots = item.find("..");
    try {
      if (dots != std::string::npos) {
        int lo = std::stoi(item.substr(0, dots));
        int hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::exception&) {
      throw ParseError(line, "bad integer list item '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError(line, "empty integer list");
  return out;
}

int set_id(const std::string& set) {
  if (set == "set1") return 1;
  if (set == "set2") return 2;
  if (set == "set3") return 3;
  throw Error("unknown generator set '" + set + "'");
}

}  // namespace

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  bool any = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError(line, "expected key=value, got '" + s + "'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    any = true;
    try {
      if (key == "set") cfg.set = value;
      else if (key == "n") cfg.ns = parse_int_list(value, line);
      else if (key == "param") cfg.params = parse_int_list(value, line);
      else if (key == "zero_prob") cfg.zero_prob = std::stod(value);
      else if (key == "reps") cfg.reps = std::stoi(value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "lp_period") cfg.lp_period = std::stoi(value);
      else if (key == "stars") cfg.use_stars = std::stoi(value) != 0;
      else if (key == "time_limit_s") cfg.time_limit_s = std::stod(value);
      else if (key == "timing") cfg.timing = std::stoi(value) != 0;
      else if (key == "jobs") cfg.jobs = std::stoi(value);
      else throw ParseError(line, "unknown key '" + key + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(line, "bad value for '" + key + "': '" + value + "'");
    }
  }
  if (!any) throw Error("empty benchmark config");
  set_id(cfg.set);
  if (cfg.ns.empty()) throw Error("benchmark config needs n=");
  if (cfg.params.empty()) throw Error("benchmark config needs param=");
  if (cfg.reps < 1) throw Error("reps must be positive");
  if (cfg.jobs < 1) throw Error("jobs must be positive");
  return cfg;
}

BenchConfig parse_bench_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  return parse_bench_config(in);
}

namespace {

struct Cell {
  int n, param, rep;
  uint64_t seed;
};

struct Row {
  Cell cell;
  SolveReport report;
};

uint64_t instance_seed(const BenchConfig& cfg, const Cell& c) {
  uint64_t s = mix_seed(cfg.seed, static_cast<uint64_t>(set_id(cfg.set)));
  s = mix_seed(s, static_cast<uint64_t>(c.n));
  s = mix_seed(s, static_cast<uint64_t>(c.param));
  return mix_seed(s, static_cast<uint64_t>(c.rep));
}

WeightedGraph make_instance(const BenchConfig& cfg, const Cell& c) {
  switch (set_id(cfg.set)) {
    case 1: return gen_set1(c.n, c.param, c.seed);
    case 2: return gen_set2(c.n, c.param, c.seed);
    default: return gen_set3(c.n, c.param, cfg.zero_prob, c.seed);
  }
}

std::string format_ms(double ms) {
  return format_double(std::round(ms * 1000.0) / 1000.0);
}

}  // namespace

BenchOutcome run_benchmark(const BenchConfig& config) {
  std::vector<Cell> cells;
  for (int n : config.ns)
    for (int param : config.params)
      for (int rep = 0; rep < config.reps; ++rep) {
        Cell c{n, param, rep, 0};
        c.seed = instance_seed(config, c);
        cells.push_back(c);
      }

  std::vector<Row> rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& c = cells[i];
      WeightedGraph g = make_instance(config, c);
      SolveConfig sc;
      sc.seed = c.seed;
      sc.lp_period = config.lp_period;
      sc.use_stars = config.use_stars;
      sc.time_limit_s = config.time_limit_s;
      rows[i] = Row{c, branch_and_bound(g, sc)};
    }
  };
  if (config.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < config.jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostringstream csv;
  csv << "set,n,param,seed,Q_trivial,Q_min,Q_max,Q_opt,nodes,lp_solves,t_ms,status\n";
  BenchOutcome outcome;
  outcome.instances = static_cast<int>(rows.size());

  size_t i = 0;
  for (int n : config.ns) {
    size_t block_start = i;
    for (; i < rows.size() && rows[i].cell.n == n; ++i) {
      const Row& row = rows[i];
      const SolveReport& r = row.report;
      bool timeout = r.timed_out;
      if (timeout) ++outcome.timeouts;
      csv << config.set << ',' << n << ',' << row.cell.param << ','
          << row.cell.seed << ',' << format_double(r.q_trivial) << ','
          << format_double(r.q_initial) << ',' << format_double(r.root_bound)
          << ',' << format_double(r.best.score) << ',' << r.stats.nodes << ','
          << r.stats.lp_solves << ','
          << (config.timing ? format_ms(r.stats.time_ms) : "0") << ','
          << (timeout ? "timeout" : "ok") << '\n';
    }

    // Aggregate over the non-timeout instances of this n: mean ratios
    // against Q_opt when every Q_opt is positive, absolute means otherwise.
    double sum_trivial = 0, sum_min = 0, sum_max = 0, sum_opt = 0;
    int64_t sum_nodes = 0, sum_lp = 0;
    double sum_ms = 0;
    int count = 0;
    bool ratios_ok = true;
    for (size_t k = block_start; k < i; ++k) {
      const SolveReport& r = rows[k].report;
      if (r.timed_out) continue;
      ++count;
      if (r.best.score <= 0) ratios_ok = false;
      sum_nodes += r.stats.nodes;
      sum_lp += r.stats.lp_solves;
      sum_ms += r.stats.time_ms;
    }
    if (count > 0) {
      for (size_t k = block_start; k < i; ++k) {
        const SolveReport& r = rows[k].report;
        if (r.timed_out) continue;
        double d = ratios_ok ? r.best.score : 1.0;
        sum_trivial += r.q_trivial / d;
        sum_min += r.q_initial / d;
        sum_max += r.root_bound / d;
        sum_opt += r.best.score;
      }
      csv << config.set << ',' << n << ",all," << count << ','
          << format_double(sum_trivial / count) << ','
          << format_double(sum_min / count) << ','
          << format_double(sum_max / count) << ','
          << format_double(sum_opt / count) << ',' << sum_nodes << ','
          << sum_lp << ',' << (config.timing ? format_ms(sum_ms) : "0") << ','
          << (ratios_ok ? "AGG" : "AGG_ABS") << '\n';
    }
  }
  outcome.csv = csv.str();
  return outcome;
}

}  // namespace cliquepart
