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

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct Trace {
  std::vector<std::string> lines;
  static void sink(const char* line, void* user) {
    static_cast<Trace*>(user)->lines.emplace_back(line);
  }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::strlen(alsim_version()) > 0);
  CHECK(std::string(alsim_status_name(ALSIM_OK)) == "ok");
  CHECK(std::string(alsim_status_name(ALSIM_E_SIZE_LIMIT)) == "size-limit");
}

TEST_CASE("errors come back as codes with a message") {
  alsim_graph* g = nullptr;
  CHECK(alsim_graph_parse("ring:2", 0, &g) == ALSIM_E_INVALID_TOPOLOGY);
  CHECK(g == nullptr);
  CHECK(std::strlen(alsim_last_error()) > 0);
  CHECK(alsim_graph_parse("nonsense:1", 0, &g) != ALSIM_OK);
  CHECK(alsim_graph_parse(nullptr, 0, &g) == ALSIM_E_INVALID_ARGUMENT);
  alsim_task* t = nullptr;
  CHECK(alsim_task_parse("coloring:x", &t) == ALSIM_E_PARSE);
}

TEST_CASE("run through the C interface") {
  alsim_graph* g = nullptr;
  REQUIRE(alsim_graph_parse("ring:8", 0, &g) == ALSIM_OK);
  CHECK(alsim_graph_node_count(g) == 8);
  int sym = 0;
  CHECK(alsim_graph_is_symmetric(g, &sym) == ALSIM_OK);
  CHECK(sym == 1);
  alsim_task* task = nullptr;
  alsim_algorithm* algo = nullptr;
  REQUIRE(alsim_task_parse("coloring:3", &task) == ALSIM_OK);
  REQUIRE(alsim_algorithm_parse("universal:coloring:3", &algo) == ALSIM_OK);
  alsim_schedule* s = nullptr;
  REQUIRE(alsim_schedule_parse("random:seed=1,window=4,never=0.2,crash=0.2", g, 0, &s) ==
          ALSIM_OK);

  alsim_run_options opts{};
  opts.model = ALSIM_MODEL_ASYNC;
  opts.transform = 1;
  alsim_report* r = nullptr;
  REQUIRE(alsim_run(g, s, task, algo, &opts, &r) == ALSIM_OK);
  CHECK(alsim_report_verdict(r) == ALSIM_VERDICT_PASS);
  CHECK(alsim_report_witness(r) == -1);
  uint64_t tau = 0;
  CHECK(alsim_report_tau(r, &tau) == 1);
  CHECK(tau == 64);
  CHECK(alsim_report_radius(r) == 192);
  for (size_t v = 0; v < 8; ++v) {
    alsim_node_result nr{};
    REQUIRE(alsim_report_node(r, v, &nr) == ALSIM_OK);
    CHECK(nr.wake == alsim_schedule_wake(s, v));
    CHECK(nr.crashed == alsim_schedule_crashes(s, v));
    CHECK(nr.has_output == (nr.wake != ALSIM_NEVER && !nr.crashed));
  }
  alsim_node_result out_of_range{};
  CHECK(alsim_report_node(r, 8, &out_of_range) == ALSIM_E_INVALID_ARGUMENT);
  alsim_report_free(r);

  alsim_run_options plain{};
  CHECK(alsim_run(g, s, task, algo, &plain, &r) == ALSIM_OK);
  alsim_report_free(r);
  plain.transform = 1;
  CHECK(alsim_run(g, s, task, algo, &plain, &r) == ALSIM_E_USAGE);

  char* json = nullptr;
  REQUIRE(alsim_schedule_to_json(s, &json) == ALSIM_OK);
  alsim_schedule* again = nullptr;
  REQUIRE(alsim_schedule_parse(json, g, 0, &again) == ALSIM_OK);
  for (size_t v = 0; v < 8; ++v) CHECK(alsim_schedule_wake(again, v) == alsim_schedule_wake(s, v));
  alsim_string_free(json);
  alsim_schedule_free(again);

  alsim_schedule_free(s);
  alsim_algorithm_free(algo);
  alsim_task_free(task);
  alsim_graph_free(g);
}

TEST_CASE("enumeration through the C interface") {
  alsim_graph* g = nullptr;
  alsim_task* task = nullptr;
  alsim_algorithm* bad = nullptr;
  REQUIRE(alsim_graph_parse("ring:3", 0, &g) == ALSIM_OK);
  REQUIRE(alsim_task_parse("coloring:3", &task) == ALSIM_OK);
  REQUIRE(alsim_algorithm_parse("const:1", &bad) == ALSIM_OK);
  alsim_enumeration e{};
  REQUIRE(alsim_enumeration_parse("enumerate:maxwake=1,never,crash", &e) == ALSIM_OK);
  uint64_t count = 0;
  CHECK(alsim_enumeration_count(g, &e, &count) == ALSIM_OK);
  CHECK(count == 125);
  alsim_schedule* s = nullptr;
  CHECK(alsim_enumeration_at(g, &e, 124, &s) == ALSIM_OK);
  alsim_schedule_free(s);
  CHECK(alsim_schedule_parse("enumerate:maxwake=1", g, 0, &s) == ALSIM_E_USAGE);

  alsim_run_options opts{};
  opts.model = ALSIM_MODEL_ASYNC;
  opts.transform = 1;
  alsim_enumerate_summary sum{};
  CHECK(alsim_enumerate(g, task, bad, &opts, &e, 2, &sum) == ALSIM_OK);
  CHECK(sum.total == 125);
  CHECK(sum.failed > 0);
  CHECK(sum.has_counterexample == 1);
  CHECK(sum.witness >= 0);

  alsim_graph* big = nullptr;
  REQUIRE(alsim_graph_parse("ring:12", 0, &big) == ALSIM_OK);
  alsim_enumeration wide{3, 1, 1};
  CHECK(alsim_enumeration_count(big, &wide, &count) == ALSIM_E_SIZE_LIMIT);
  CHECK(count == 282429536481ull);  // 9^12
  alsim_graph_free(big);

  alsim_algorithm_free(bad);
  alsim_task_free(task);
  alsim_graph_free(g);
}

TEST_CASE("decoupled trace callback") {
  alsim_graph* g = nullptr;
  alsim_algorithm* dig = nullptr;
  alsim_schedule* s = nullptr;
  REQUIRE(alsim_graph_parse("ring:4", 0, &g) == ALSIM_OK);
  REQUIRE(alsim_algorithm_parse("digest:1", &dig) == ALSIM_OK);
  REQUIRE(alsim_schedule_parse("sync", g, 0, &s) == ALSIM_OK);
  Trace trace;
  alsim_run_options opts{};
  opts.model = ALSIM_MODEL_DECOUPLED;
  opts.trace = &Trace::sink;
  opts.trace_user = &trace;
  alsim_report* r = nullptr;
  REQUIRE(alsim_run(g, s, nullptr, dig, &opts, &r) == ALSIM_OK);
  CHECK(alsim_report_verdict(r) == ALSIM_VERDICT_NONE);
  CHECK(trace.lines.size() == 8);
  CHECK(trace.lines.front().rfind("round=1 edge=", 0) == 0);
  uint64_t rb = 0;
  CHECK(alsim_algorithm_round_bound(dig, 4, &rb) == ALSIM_E_USAGE);
  alsim_report_free(r);
  alsim_schedule_free(s);
  alsim_algorithm_free(dig);
  alsim_graph_free(g);
}
