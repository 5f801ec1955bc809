/*
 * Copyright 2026 The alsim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * alsim: simulation of LOCAL, AsyncLocal and DECOUPLED network computing.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an alsim_status; on
 * failure a description is available from alsim_last_error() on the same
 * thread until the next failing call. Strings returned through char** are
 * released with alsim_string_free().
 */
#ifndef ALSIM_ALSIM_H_
#define ALSIM_ALSIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ALSIM_BUILDING_LIBRARY)
#    define ALSIM_API __declspec(dllexport)
#  else
#    define ALSIM_API __declspec(dllimport)
#  endif
#else
#  define ALSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum alsim_status {
  ALSIM_OK = 0,
  ALSIM_E_INVALID_ARGUMENT = 1,
  ALSIM_E_INVALID_TOPOLOGY = 2,
  ALSIM_E_INVALID_IDS = 3,
  ALSIM_E_CONTRACT = 4,
  ALSIM_E_SIZE_LIMIT = 5,
  ALSIM_E_UNSOLVABLE = 6,
  ALSIM_E_PARSE = 7,
  ALSIM_E_IO = 8,
  ALSIM_E_USAGE = 9,
  ALSIM_E_INTERNAL = 10
} alsim_status;

typedef enum alsim_model {
  ALSIM_MODEL_LOCAL = 0,
  ALSIM_MODEL_ASYNC = 1,
  ALSIM_MODEL_DECOUPLED = 2
} alsim_model;

typedef enum alsim_verdict {
  ALSIM_VERDICT_NONE = 0, /* no task was given */
  ALSIM_VERDICT_PASS = 1,
  ALSIM_VERDICT_FAIL = 2
} alsim_verdict;

/* Wake value meaning "never wakes". */
#define ALSIM_NEVER (-1)

typedef struct alsim_graph alsim_graph;
typedef struct alsim_schedule alsim_schedule;
typedef struct alsim_task alsim_task;
typedef struct alsim_algorithm alsim_algorithm;
typedef struct alsim_report alsim_report;

ALSIM_API const char* alsim_version(void);
ALSIM_API const char* alsim_last_error(void);
ALSIM_API const char* alsim_status_name(alsim_status status);
ALSIM_API void alsim_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* ring:<n>, torus:<r>x<c>, path:<n>, random:n=<n>[,p=<p>][,N=<N>], inline
 * JSON or a JSON file path. `seed` feeds random graphs. */
ALSIM_API alsim_status alsim_graph_parse(const char* spec, uint64_t seed,
                                         alsim_graph** out);
/* Same topology, ids redrawn as distinct values below `id_bound`. */
ALSIM_API alsim_status alsim_graph_shuffle_ids(const alsim_graph* g,
                                               uint64_t seed, uint64_t id_bound,
                                               alsim_graph** out);
ALSIM_API alsim_status alsim_graph_to_json(const alsim_graph* g, char** out);
ALSIM_API size_t alsim_graph_node_count(const alsim_graph* g);
ALSIM_API uint64_t alsim_graph_id_bound(const alsim_graph* g);
ALSIM_API alsim_status alsim_graph_id(const alsim_graph* g, size_t node,
                                      uint64_t* out);
/* Port-preserving vertex transitivity, brute force; refuses large graphs. */
ALSIM_API alsim_status alsim_graph_is_symmetric(const alsim_graph* g,
                                                int* out);
ALSIM_API void alsim_graph_free(alsim_graph* g);

/* ---- schedules ------------------------------------------------------- */

/* sync, random:seed=S,window=W,never=P,crash=P, inline JSON or a JSON file
 * path. A random spec without seed= uses `default_seed`. Enumeration specs
 * are rejected here; see alsim_enumeration_*. */
ALSIM_API alsim_status alsim_schedule_parse(const char* spec,
                                            const alsim_graph* g,
                                            uint64_t default_seed,
                                            alsim_schedule** out);
ALSIM_API size_t alsim_schedule_node_count(const alsim_schedule* s);
/* Wake round, or ALSIM_NEVER. */
ALSIM_API int64_t alsim_schedule_wake(const alsim_schedule* s, size_t node);
/* 1 if the node crashes before producing output. */
ALSIM_API int alsim_schedule_crashes(const alsim_schedule* s, size_t node);
ALSIM_API alsim_status alsim_schedule_to_json(const alsim_schedule* s,
                                              char** out);
ALSIM_API void alsim_schedule_free(alsim_schedule* s);

typedef struct alsim_enumeration {
  uint64_t max_wake;
  int include_never;
  int include_crash;
} alsim_enumeration;

/* Parses enumerate:maxwake=W[,never][,crash]. */
ALSIM_API alsim_status alsim_enumeration_parse(const char* spec,
                                               alsim_enumeration* out);
/* Closed-form schedule count; fails with ALSIM_E_SIZE_LIMIT above the
 * enumeration limit (ALSIM_MAX_ENUM, default 1000000), still writing the
 * would-be count to *out. */
ALSIM_API alsim_status alsim_enumeration_count(const alsim_graph* g,
                                               const alsim_enumeration* e,
                                               uint64_t* out);
ALSIM_API alsim_status alsim_enumeration_at(const alsim_graph* g,
                                            const alsim_enumeration* e,
                                            uint64_t index,
                                            alsim_schedule** out);

/* ---- tasks and algorithms -------------------------------------------- */

/* coloring:<c> or mis. */
ALSIM_API alsim_status alsim_task_parse(const char* spec, alsim_task** out);
ALSIM_API const char* alsim_task_name(const alsim_task* t);
ALSIM_API void alsim_task_free(alsim_task* t);

/* cv3, universal:<task>, const:<label>, digest:<t>. */
ALSIM_API alsim_status alsim_algorithm_parse(const char* spec,
                                             alsim_algorithm** out);
/* Rounds used by a LOCAL algorithm for the given id bound. */
ALSIM_API alsim_status alsim_algorithm_round_bound(const alsim_algorithm* a,
                                                   uint64_t id_bound,
                                                   uint64_t* out);
ALSIM_API void alsim_algorithm_free(alsim_algorithm* a);

/* ---- runs ------------------------------------------------------------ */

typedef void (*alsim_trace_fn)(const char* line, void* user);

typedef struct alsim_run_options {
  alsim_model model;
  int transform;      /* wrap a LOCAL algorithm for async/decoupled */
  uint64_t id_bound;  /* 0: the graph's declared bound */
  alsim_trace_fn trace; /* decoupled deliveries, may be NULL */
  void* trace_user;
} alsim_run_options;

/* `schedule` may be NULL (synchronous wake-up); `task` may be NULL (no
 * verdict). Usage errors report incompatible model/algorithm/graph choices. */
ALSIM_API alsim_status alsim_run(const alsim_graph* g,
                                 const alsim_schedule* schedule,
                                 const alsim_task* task,
                                 const alsim_algorithm* algo,
                                 const alsim_run_options* options,
                                 alsim_report** out);

ALSIM_API size_t alsim_report_node_count(const alsim_report* r);
ALSIM_API alsim_verdict alsim_report_verdict(const alsim_report* r);
/* First failing center, or -1. */
ALSIM_API int64_t alsim_report_witness(const alsim_report* r);
/* tau of a transformed run; returns 0 and leaves *out alone otherwise. */
ALSIM_API int alsim_report_tau(const alsim_report* r, uint64_t* out);
/* LOCAL round bound or snapshot radius. */
ALSIM_API uint64_t alsim_report_radius(const alsim_report* r);
ALSIM_API uint64_t alsim_report_id_bound(const alsim_report* r);
ALSIM_API double alsim_report_wall_ms(const alsim_report* r);

typedef struct alsim_node_result {
  uint64_t id;
  int64_t wake;  /* ALSIM_NEVER if it never woke */
  int crashed;
  size_t visible;
  int has_output;
  int64_t output;
} alsim_node_result;

ALSIM_API alsim_status alsim_report_node(const alsim_report* r, size_t node,
                                         alsim_node_result* out);
ALSIM_API void alsim_report_free(alsim_report* r);

typedef struct alsim_enumerate_summary {
  uint64_t total;
  uint64_t passed;
  uint64_t failed;
  int has_counterexample;
  uint64_t counterexample_index; /* lowest failing schedule index */
  int64_t witness;
} alsim_enumerate_summary;

/* Runs every enumerated schedule and checks each against `task`. `workers`
 * 0 uses all hardware threads. */
ALSIM_API alsim_status alsim_enumerate(const alsim_graph* g,
                                       const alsim_task* task,
                                       const alsim_algorithm* algo,
                                       const alsim_run_options* options,
                                       const alsim_enumeration* e,
                                       unsigned workers,
                                       alsim_enumerate_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* ALSIM_ALSIM_H_ */
