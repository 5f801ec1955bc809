// Copyright 2026 The alsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alsim/alsim.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "core/driver.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"
#include "core/schedule.hpp"

struct alsim_graph {
  alsim::PortGraph graph;
};
struct alsim_schedule {
  alsim::Schedule schedule;
};
struct alsim_task {
  alsim::LclTask task;
};
struct alsim_algorithm {
  alsim::AlgorithmChoice choice;
};
struct alsim_report {
  alsim::RunReport report;
};

namespace {

thread_local std::string g_last_error;

alsim_status set_error(alsim_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
alsim_status guarded(Body&& body) {
  try {
    body();
    return ALSIM_OK;
  } catch (const alsim::Error& e) {
    return set_error(static_cast<alsim_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ALSIM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ALSIM_E_INTERNAL, e.what());
  }
}

alsim_status null_argument(const char* what) {
  return set_error(ALSIM_E_INVALID_ARGUMENT, std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

alsim::EnumerationParams to_params(const alsim_enumeration& e) {
  return {e.max_wake, e.include_never != 0, e.include_crash != 0};
}

alsim::RunOptions to_options(const alsim_run_options* o) {
  alsim::RunOptions out;
  if (!o) return out;
  switch (o->model) {
    case ALSIM_MODEL_LOCAL: out.model = alsim::Model::kLocal; break;
    case ALSIM_MODEL_ASYNC: out.model = alsim::Model::kAsync; break;
    case ALSIM_MODEL_DECOUPLED: out.model = alsim::Model::kDecoupled; break;
    default: alsim::fail(alsim::ErrorCode::kUsage, "unknown model");
  }
  out.transform = o->transform != 0;
  out.id_bound = o->id_bound;
  if (o->trace) {
    auto fn = o->trace;
    void* user = o->trace_user;
    out.trace = [fn, user](std::string_view line) {
      std::string copy(line);
      fn(copy.c_str(), user);
    };
  }
  return out;
}

std::optional<alsim::LclTask> task_of(const alsim_task* t) {
  if (!t) return std::nullopt;
  return t->task;
}

}  // namespace

extern "C" {

const char* alsim_version(void) { return "0.1.0"; }

const char* alsim_last_error(void) { return g_last_error.c_str(); }

const char* alsim_status_name(alsim_status status) {
  if (status == ALSIM_OK) return "ok";
  return alsim::error_code_name(static_cast<alsim::ErrorCode>(status));
}

void alsim_string_free(char* s) { std::free(s); }

alsim_status alsim_graph_parse(const char* spec, uint64_t seed, alsim_graph** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new alsim_graph{alsim::parse_graph_spec(spec, seed)}; });
}

alsim_status alsim_graph_shuffle_ids(const alsim_graph* g, uint64_t seed,
                                     uint64_t id_bound, alsim_graph** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    alsim::Rng rng(seed);
    auto ids = alsim::random_ids(g->graph.node_count(), id_bound, rng);
    *out = new alsim_graph{g->graph.with_ids(std::move(ids), id_bound)};
  });
}

alsim_status alsim_graph_to_json(const alsim_graph* g, char** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(alsim::graph_to_json(g->graph).dump()); });
}

size_t alsim_graph_node_count(const alsim_graph* g) {
  return g ? g->graph.node_count() : 0;
}

uint64_t alsim_graph_id_bound(const alsim_graph* g) {
  return g ? g->graph.id_bound() : 0;
}

alsim_status alsim_graph_id(const alsim_graph* g, size_t node, uint64_t* out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  if (node >= g->graph.node_count())
    return set_error(ALSIM_E_INVALID_ARGUMENT, "node index out of range");
  *out = g->graph.id(static_cast<alsim::NodeIndex>(node));
  return ALSIM_OK;
}

alsim_status alsim_graph_is_symmetric(const alsim_graph* g, int* out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] { *out = alsim::is_symmetric(g->graph) ? 1 : 0; });
}

void alsim_graph_free(alsim_graph* g) { delete g; }

alsim_status alsim_schedule_parse(const char* spec, const alsim_graph* g,
                                  uint64_t default_seed, alsim_schedule** out) {
  if (!spec) return null_argument("spec");
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto parsed = alsim::parse_schedule_spec(spec, g->graph, default_seed);
    if (!parsed.fixed)
      alsim::fail(alsim::ErrorCode::kUsage,
                  "enumeration specs describe many schedules; use alsim_enumeration_*");
    *out = new alsim_schedule{*parsed.fixed};
  });
}

size_t alsim_schedule_node_count(const alsim_schedule* s) {
  return s ? s->schedule.node_count() : 0;
}

int64_t alsim_schedule_wake(const alsim_schedule* s, size_t node) {
  if (!s || node >= s->schedule.node_count()) return ALSIM_NEVER;
  auto w = s->schedule.wake(static_cast<alsim::NodeIndex>(node));
  return w ? static_cast<int64_t>(*w) : ALSIM_NEVER;
}

int alsim_schedule_crashes(const alsim_schedule* s, size_t node) {
  if (!s || node >= s->schedule.node_count()) return 0;
  return s->schedule.fate(static_cast<alsim::NodeIndex>(node)) ==
                 alsim::Fate::kCrashBeforeOutput
             ? 1
             : 0;
}

alsim_status alsim_schedule_to_json(const alsim_schedule* s, char** out) {
  if (!s) return null_argument("schedule");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(alsim::schedule_to_json(s->schedule).dump()); });
}

void alsim_schedule_free(alsim_schedule* s) { delete s; }

alsim_status alsim_enumeration_parse(const char* spec, alsim_enumeration* out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] {
    // Enumeration specs do not depend on the graph; parse against a stub.
    static const alsim::PortGraph stub = alsim::make_path({0}, 1);
    auto parsed = alsim::parse_schedule_spec(spec, stub, 0);
    if (!parsed.enumeration)
      alsim::fail(alsim::ErrorCode::kParse,
                  "expected enumerate:maxwake=W[,never][,crash]");
    out->max_wake = parsed.enumeration->max_wake;
    out->include_never = parsed.enumeration->include_never;
    out->include_crash = parsed.enumeration->include_crash;
  });
}

alsim_status alsim_enumeration_count(const alsim_graph* g, const alsim_enumeration* e,
                                     uint64_t* out) {
  if (!g) return null_argument("graph");
  if (!e) return null_argument("enumeration");
  if (!out) return null_argument("out");
  *out = alsim::ScheduleSpace::count(g->graph.node_count(), to_params(*e));
  return guarded([&] { alsim::ScheduleSpace(g->graph.node_count(), to_params(*e)); });
}

alsim_status alsim_enumeration_at(const alsim_graph* g, const alsim_enumeration* e,
                                  uint64_t index, alsim_schedule** out) {
  if (!g) return null_argument("graph");
  if (!e) return null_argument("enumeration");
  if (!out) return null_argument("out");
  return guarded([&] {
    alsim::ScheduleSpace space(g->graph.node_count(), to_params(*e));
    *out = new alsim_schedule{space.at(index)};
  });
}

alsim_status alsim_task_parse(const char* spec, alsim_task** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new alsim_task{alsim::parse_task_spec(spec)}; });
}

const char* alsim_task_name(const alsim_task* t) {
  return t ? t->task.name.c_str() : "";
}

void alsim_task_free(alsim_task* t) { delete t; }

alsim_status alsim_algorithm_parse(const char* spec, alsim_algorithm** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new alsim_algorithm{alsim::parse_algorithm_spec(spec)}; });
}

alsim_status alsim_algorithm_round_bound(const alsim_algorithm* a, uint64_t id_bound,
                                         uint64_t* out) {
  if (!a) return null_argument("algorithm");
  if (!out) return null_argument("out");
  if (!a->choice.is_local())
    return set_error(ALSIM_E_USAGE, a->choice.spec + " is not a LOCAL algorithm");
  return guarded([&] {
    *out = std::get<alsim::LocalAlgorithm>(a->choice.impl).round_bound(id_bound);
  });
}

void alsim_algorithm_free(alsim_algorithm* a) { delete a; }

alsim_status alsim_run(const alsim_graph* g, const alsim_schedule* schedule,
                       const alsim_task* task, const alsim_algorithm* algo,
                       const alsim_run_options* options, alsim_report** out) {
  if (!g) return null_argument("graph");
  if (!algo) return null_argument("algorithm");
  if (!out) return null_argument("out");
  return guarded([&] {
    alsim::Pipeline pipeline(g->graph, task_of(task), algo->choice, to_options(options));
    const alsim::Schedule s =
        schedule ? schedule->schedule : alsim::sync_schedule(g->graph);
    *out = new alsim_report{pipeline.run(s)};
  });
}

size_t alsim_report_node_count(const alsim_report* r) {
  return r ? r->report.nodes.size() : 0;
}

alsim_verdict alsim_report_verdict(const alsim_report* r) {
  if (!r || !r->report.verdict) return ALSIM_VERDICT_NONE;
  return r->report.verdict->ok ? ALSIM_VERDICT_PASS : ALSIM_VERDICT_FAIL;
}

int64_t alsim_report_witness(const alsim_report* r) {
  if (!r || !r->report.verdict || !r->report.verdict->witness) return -1;
  return *r->report.verdict->witness;
}

int alsim_report_tau(const alsim_report* r, uint64_t* out) {
  if (!r || !r->report.tau || !out) return 0;
  *out = *r->report.tau;
  return 1;
}

uint64_t alsim_report_radius(const alsim_report* r) { return r ? r->report.radius : 0; }

uint64_t alsim_report_id_bound(const alsim_report* r) { return r ? r->report.id_bound : 0; }

double alsim_report_wall_ms(const alsim_report* r) { return r ? r->report.wall_ms : 0.0; }

alsim_status alsim_report_node(const alsim_report* r, size_t node, alsim_node_result* out) {
  if (!r) return null_argument("report");
  if (!out) return null_argument("out");
  if (node >= r->report.nodes.size())
    return set_error(ALSIM_E_INVALID_ARGUMENT, "node index out of range");
  const alsim::NodeReport& n = r->report.nodes[node];
  out->id = n.id;
  out->wake = n.wake ? static_cast<int64_t>(*n.wake) : ALSIM_NEVER;
  out->crashed = n.fate == alsim::Fate::kCrashBeforeOutput;
  out->visible = n.visible;
  out->has_output = n.output.has_value();
  out->output = n.output.value_or(0);
  return ALSIM_OK;
}

void alsim_report_free(alsim_report* r) { delete r; }

alsim_status alsim_enumerate(const alsim_graph* g, const alsim_task* task,
                             const alsim_algorithm* algo,
                             const alsim_run_options* options,
                             const alsim_enumeration* e, unsigned workers,
                             alsim_enumerate_summary* out) {
  if (!g) return null_argument("graph");
  if (!task) return null_argument("task");
  if (!algo) return null_argument("algorithm");
  if (!e) return null_argument("enumeration");
  if (!out) return null_argument("out");
  return guarded([&] {
    alsim::ScheduleSpace space(g->graph.node_count(), to_params(*e));
    alsim::Pipeline pipeline(g->graph, task->task, algo->choice, to_options(options));
    auto summary = alsim::enumerate(pipeline, space, workers);
    out->total = summary.total;
    out->passed = summary.passed;
    out->failed = summary.failed;
    out->has_counterexample = summary.first_failure.has_value();
    out->counterexample_index = summary.first_failure.value_or(0);
    out->witness = summary.witness ? static_cast<int64_t>(*summary.witness) : -1;
  });
}

}  // extern "C"
