/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the cliquepart solver library. All objects are opaque
 * handles owned by the library; every function that can fail returns a
 * cpart_status, with a human-readable detail available from
 * cpart_last_error() on the same thread.
 */
#ifndef CLIQUEPART_CLIQUEPART_H
#define CLIQUEPART_CLIQUEPART_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpart_status {
  CPART_OK = 0,
  CPART_ERROR_INVALID_ARGUMENT = 1,
  CPART_ERROR_PARSE = 2,
  CPART_ERROR_IO = 3,
  CPART_ERROR_TOO_LARGE = 4,
  CPART_ERROR_SOLVER = 5,
  CPART_ERROR_TIMEOUT = 6,
  CPART_ERROR_INTERNAL = 7
} cpart_status;

/* Static name of a status code ("ok", "parse error", ...). */
const char* cpart_status_name(cpart_status status);

/* Detail message of the last failure on this thread; empty string if none. */
const char* cpart_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

typedef struct cpart_graph cpart_graph;

/* Graph text format: '#' comments, first payload line the node count, then
 * "i j w" lines with 1-based indices; "i i w" folds into the loop offset. */
cpart_status cpart_graph_load(const char* path, cpart_graph** out);
cpart_status cpart_graph_load_string(const char* text, cpart_graph** out);
cpart_status cpart_graph_save(const cpart_graph* graph, const char* path);
/* Caller frees the returned text with cpart_string_free. */
cpart_status cpart_graph_save_string(const cpart_graph* graph, char** out);

/* Random families: "set1" (uniform integers in [-param, param]), "set2"
 * (binary-vector similarity, vector length param), "set3" (set1 with edges
 * zeroed at probability zero_prob). zero_prob is ignored for set1/set2. */
cpart_status cpart_graph_generate(const char* set, int n, int param,
                                  double zero_prob, uint64_t seed,
                                  cpart_graph** out);

void cpart_graph_free(cpart_graph* graph);

int cpart_graph_node_count(const cpart_graph* graph);
double cpart_graph_weight(const cpart_graph* graph, int i, int j);
double cpart_graph_loop_offset(const cpart_graph* graph);
int cpart_graph_is_integral(const cpart_graph* graph);
double cpart_graph_trivial_bound(const cpart_graph* graph);

/* Quality of the partition given as one 0-based cluster label per node. */
cpart_status cpart_quality(const cpart_graph* graph, const int* labels,
                           double* out);

void cpart_string_free(char* text);

/* ---- solving ----------------------------------------------------------- */

typedef struct cpart_options {
  uint64_t seed;
  int lp_period;        /* LP bound every lp_period tree levels; default 4 */
  int use_stars;        /* nonzero: star subnetworks in the root bound */
  double time_limit_s;  /* <= 0: unlimited */
} cpart_options;

void cpart_options_init(cpart_options* options);

typedef struct cpart_report cpart_report;

/* Exact branch-and-bound solve. On CPART_OK the caller owns *out. A time
 * limit hit still produces a report (with the incumbent) and returns
 * CPART_ERROR_TIMEOUT with *out set. */
cpart_status cpart_solve(const cpart_graph* graph,
                         const cpart_options* options, cpart_report** out);

double cpart_report_q_opt(const cpart_report* report);
double cpart_report_q_trivial(const cpart_report* report);
double cpart_report_q_initial(const cpart_report* report);
double cpart_report_root_bound(const cpart_report* report);
int cpart_report_proved_at_root(const cpart_report* report);
int cpart_report_timed_out(const cpart_report* report);
int64_t cpart_report_nodes(const cpart_report* report);
int64_t cpart_report_lp_solves(const cpart_report* report);
int64_t cpart_report_heuristic_solves(const cpart_report* report);
double cpart_report_time_ms(const cpart_report* report);
/* labels must hold cpart_graph_node_count entries. */
cpart_status cpart_report_labels(const cpart_report* report, int* labels);
void cpart_report_free(cpart_report* report);

/* ---- bounds and reference solutions ------------------------------------ */

/* Root upper bound from the penalty LP over chains (and stars when
 * options->use_stars). Outputs may be NULL when not needed. */
cpart_status cpart_root_bound(const cpart_graph* graph,
                              const cpart_options* options, double* penalty,
                              double* upper_bound);

/* Upper bound from the relaxed integer formulation (triangle inequalities,
 * variables in [0,1]); limited to 40 nodes. */
cpart_status cpart_relaxed_bound(const cpart_graph* graph, double* upper_bound);

/* Writes the root penalty LP in a plain text layout for diagnostics. */
cpart_status cpart_penalty_lp_dump(const cpart_graph* graph, int use_stars,
                                   const char* path);

/* Initial feasible solution (agglomeration plus local search). */
cpart_status cpart_initial_solution(const cpart_graph* graph, uint64_t seed,
                                    int* labels, double* score);

/* Exhaustive optimum; limited to 13 nodes. */
cpart_status cpart_oracle(const cpart_graph* graph, int* labels, double* score);

/* ---- benchmark harness -------------------------------------------------- */

/* Runs the benchmark described by a key=value config file and writes the
 * CSV report. Returns CPART_ERROR_TIMEOUT when every instance timed out
 * (the report is still written). */
cpart_status cpart_run_benchmark(const char* config_path, const char* csv_path);

#ifdef __cplusplus
}
#endif

#endif /* CLIQUEPART_CLIQUEPART_H */
