/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "cliquepart/cliquepart.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <string>

#include "core/bench.hpp"
#include "core/bound.hpp"
#include "core/common.hpp"
#include "core/fixation.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/heuristic.hpp"
#include "core/lp.hpp"
#include "core/oracle.hpp"
#include "core/search.hpp"
#include "core/subnetwork.hpp"

struct cpart_graph {
  cliquepart::WeightedGraph graph;
};

struct cpart_report {
  cliquepart::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

cpart_status fail(cpart_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

cpart_status ok() {
  g_last_error.clear();
  return CPART_OK;
}

// Translates core exceptions into status codes at the library boundary.
template <typename Fn>
cpart_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const cliquepart::ParseError& e) {
    return fail(CPART_ERROR_PARSE, e.what());
  } catch (const cliquepart::IoError& e) {
    return fail(CPART_ERROR_IO, e.what());
  } catch (const cliquepart::SizeError& e) {
    return fail(CPART_ERROR_TOO_LARGE, e.what());
  } catch (const cliquepart::DimensionError& e) {
    return fail(CPART_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const cliquepart::Error& e) {
    return fail(CPART_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CPART_ERROR_INTERNAL, e.what());
  }
}

cpart_status require(bool condition, const char* what) {
  return condition ? CPART_OK : fail(CPART_ERROR_INVALID_ARGUMENT, what);
}

}  // namespace

extern "C" {

const char* cpart_status_name(cpart_status status) {
  switch (status) {
    case CPART_OK: return "ok";
    case CPART_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CPART_ERROR_PARSE: return "parse error";
    case CPART_ERROR_IO: return "i/o error";
    case CPART_ERROR_TOO_LARGE: return "instance too large";
    case CPART_ERROR_SOLVER: return "solver failure";
    case CPART_ERROR_TIMEOUT: return "time limit reached";
    case CPART_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cpart_last_error(void) { return g_last_error.c_str(); }

cpart_status cpart_graph_load(const char* path, cpart_graph** out) {
  if (cpart_status s = require(path && out, "null argument")) return s;
  return guarded([&] {
    *out = new cpart_graph{cliquepart::load_graph_file(path)};
    return ok();
  });
}

cpart_status cpart_graph_load_string(const char* text, cpart_graph** out) {
  if (cpart_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new cpart_graph{cliquepart::load_graph_string(text)};
    return ok();
  });
}

cpart_status cpart_graph_save(const cpart_graph* graph, const char* path) {
  if (cpart_status s = require(graph && path, "null argument")) return s;
  return guarded([&] {
    cliquepart::save_graph_file(graph->graph, path);
    return ok();
  });
}

cpart_status cpart_graph_save_string(const cpart_graph* graph, char** out) {
  if (cpart_status s = require(graph && out, "null argument")) return s;
  return guarded([&] {
    std::string text = cliquepart::save_graph(graph->graph);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
    return ok();
  });
}

cpart_status cpart_graph_generate(const char* set, int n, int param,
                                  double zero_prob, uint64_t seed,
                                  cpart_graph** out) {
  if (cpart_status s = require(set && out, "null argument")) return s;
  return guarded([&]() -> cpart_status {
    std::string name(set);
    cliquepart::WeightedGraph g(1);
    if (name == "set1") g = cliquepart::gen_set1(n, param, seed);
    else if (name == "set2") g = cliquepart::gen_set2(n, param, seed);
    else if (name == "set3") g = cliquepart::gen_set3(n, param, zero_prob, seed);
    else return fail(CPART_ERROR_INVALID_ARGUMENT, "unknown set '" + name + "'");
    *out = new cpart_graph{std::move(g)};
    return ok();
  });
}

void cpart_graph_free(cpart_graph* graph) { delete graph; }

int cpart_graph_node_count(const cpart_graph* graph) {
  return graph ? graph->graph.node_count() : 0;
}

double cpart_graph_weight(const cpart_graph* graph, int i, int j) {
  if (!graph) return 0.0;
  int n = graph->graph.node_count();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) return 0.0;
  return graph->graph.weight(i, j);
}

double cpart_graph_loop_offset(const cpart_graph* graph) {
  return graph ? graph->graph.loop_offset() : 0.0;
}

int cpart_graph_is_integral(const cpart_graph* graph) {
  return graph && graph->graph.integral() ? 1 : 0;
}

double cpart_graph_trivial_bound(const cpart_graph* graph) {
  return graph ? cliquepart::trivial_upper_bound(graph->graph) : 0.0;
}

cpart_status cpart_quality(const cpart_graph* graph, const int* labels,
                           double* out) {
  if (cpart_status s = require(graph && labels && out, "null argument")) return s;
  return guarded([&] {
    std::vector<int> v(labels, labels + graph->graph.node_count());
    *out = cliquepart::quality(graph->graph, v);
    return ok();
  });
}

void cpart_string_free(char* text) { delete[] text; }

void cpart_options_init(cpart_options* options) {
  if (!options) return;
  options->seed = 1;
  options->lp_period = 4;
  options->use_stars = 0;
  options->time_limit_s = 0.0;
}

cpart_status cpart_solve(const cpart_graph* graph,
                         const cpart_options* options, cpart_report** out) {
  if (cpart_status s = require(graph && out, "null argument")) return s;
  return guarded([&]() -> cpart_status {
    cliquepart::SolveConfig config;
    if (options) {
      config.seed = options->seed;
      config.lp_period = options->lp_period;
      config.use_stars = options->use_stars != 0;
      config.time_limit_s = options->time_limit_s;
    }
    cliquepart::SolveReport report = cliquepart::branch_and_bound(graph->graph, config);
    bool timed_out = report.timed_out;
    *out = new cpart_report{std::move(report)};
    if (timed_out) return fail(CPART_ERROR_TIMEOUT, "time limit reached");
    return ok();
  });
}

double cpart_report_q_opt(const cpart_report* report) {
  return report ? report->report.best.score : 0.0;
}

double cpart_report_q_trivial(const cpart_report* report) {
  return report ? report->report.q_trivial : 0.0;
}

double cpart_report_q_initial(const cpart_report* report) {
  return report ? report->report.q_initial : 0.0;
}

double cpart_report_root_bound(const cpart_report* report) {
  return report ? report->report.root_bound : 0.0;
}

int cpart_report_proved_at_root(const cpart_report* report) {
  return report && report->report.proved_at_root ? 1 : 0;
}

int cpart_report_timed_out(const cpart_report* report) {
  return report && report->report.timed_out ? 1 : 0;
}

int64_t cpart_report_nodes(const cpart_report* report) {
  return report ? report->report.stats.nodes : 0;
}

int64_t cpart_report_lp_solves(const cpart_report* report) {
  return report ? report->report.stats.lp_solves : 0;
}

int64_t cpart_report_heuristic_solves(const cpart_report* report) {
  return report ? report->report.stats.heuristic_solves : 0;
}

double cpart_report_time_ms(const cpart_report* report) {
  return report ? report->report.stats.time_ms : 0.0;
}

cpart_status cpart_report_labels(const cpart_report* report, int* labels) {
  if (cpart_status s = require(report && labels, "null argument")) return s;
  const std::vector<int>& v = report->report.best.labels;
  std::memcpy(labels, v.data(), v.size() * sizeof(int));
  return ok();
}

void cpart_report_free(cpart_report* report) { delete report; }

cpart_status cpart_root_bound(const cpart_graph* graph,
                              const cpart_options* options, double* penalty,
                              double* upper_bound) {
  if (cpart_status s = require(graph != nullptr, "null graph")) return s;
  return guarded([&] {
    uint64_t seed = options ? options->seed : 1;
    bool stars = options && options->use_stars != 0;
    cliquepart::EdgeFixations none(graph->graph.node_count());
    cliquepart::Rng rng(cliquepart::mix_seed(seed, 0xb0));
    cliquepart::BoundResult r =
        cliquepart::calc_penalty_lp(graph->graph, none, stars, {}, rng);
    if (penalty) *penalty = r.penalty;
    if (upper_bound) *upper_bound = r.upper_bound;
    return ok();
  });
}

cpart_status cpart_relaxed_bound(const cpart_graph* graph, double* upper_bound) {
  if (cpart_status s = require(graph && upper_bound, "null argument")) return s;
  return guarded([&] {
    *upper_bound = cliquepart::relaxed_upper_bound(graph->graph);
    return ok();
  });
}

cpart_status cpart_penalty_lp_dump(const cpart_graph* graph, int use_stars,
                                   const char* path) {
  if (cpart_status s = require(graph && path, "null argument")) return s;
  return guarded([&]() -> cpart_status {
    const cliquepart::WeightedGraph& g = graph->graph;
    cliquepart::EdgeFixations none(g.node_count());
    std::vector<cliquepart::Subnetwork> subs =
        cliquepart::enumerate_chains(g, none, 4);
    if (use_stars) {
      std::vector<cliquepart::Subnetwork> stars = cliquepart::find_stars(g);
      subs.insert(subs.end(), stars.begin(), stars.end());
    }
    cliquepart::PenaltyLp lp = cliquepart::build_penalty_lp(g, subs, none);
    std::ofstream out(path);
    if (!out) return fail(CPART_ERROR_IO, std::string("cannot open: ") + path);
    out << cliquepart::dump_lp(lp.problem);
    if (!out) return fail(CPART_ERROR_IO, std::string("write failed: ") + path);
    return ok();
  });
}

cpart_status cpart_initial_solution(const cpart_graph* graph, uint64_t seed,
                                    int* labels, double* score) {
  if (cpart_status s = require(graph && labels && score, "null argument")) return s;
  return guarded([&] {
    cliquepart::Partition p = cliquepart::initial_solution(graph->graph, seed);
    std::memcpy(labels, p.labels.data(), p.labels.size() * sizeof(int));
    *score = p.score;
    return ok();
  });
}

cpart_status cpart_oracle(const cpart_graph* graph, int* labels, double* score) {
  if (cpart_status s = require(graph && labels && score, "null argument")) return s;
  return guarded([&] {
    cliquepart::Partition p = cliquepart::brute_force_optimum(graph->graph);
    std::memcpy(labels, p.labels.data(), p.labels.size() * sizeof(int));
    *score = p.score;
    return ok();
  });
}

cpart_status cpart_run_benchmark(const char* config_path, const char* csv_path) {
  if (cpart_status s = require(config_path && csv_path, "null argument")) return s;
  return guarded([&]() -> cpart_status {
    cliquepart::BenchConfig config =
        cliquepart::parse_bench_config_file(config_path);
    cliquepart::BenchOutcome outcome = cliquepart::run_benchmark(config);
    std::ofstream out(csv_path);
    if (!out) return fail(CPART_ERROR_IO, std::string("cannot open: ") + csv_path);
    out << outcome.csv;
    if (!out) return fail(CPART_ERROR_IO, std::string("write failed: ") + csv_path);
    if (outcome.instances > 0 && outcome.timeouts == outcome.instances)
      return fail(CPART_ERROR_TIMEOUT, "every instance hit the time limit");
    return ok();
  });
}

}  // extern "C"
