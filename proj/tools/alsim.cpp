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

// alsim command-line driver. Links only the C API.
//
//   alsim run       --graph ring:8 --task coloring:3 --algo cv3 --model local
//   alsim enumerate --graph ring:3 --task coloring:3 --algo universal:coloring:3
//                   --model async --transform --schedule enumerate:maxwake=1,never,crash
//   alsim compare   --graph torus:3x3 --algo digest:2 --schedule random:window=3
//
// Exit status: 0 pass, 1 verdict fail, 2 usage or configuration error,
// 3 size-limit guard.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alsim/alsim.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;

struct CliError {
  alsim_status status;
  std::string message;
};

void check(alsim_status status) {
  if (status != ALSIM_OK) throw CliError{status, alsim_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) {
  throw CliError{ALSIM_E_USAGE, message};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Graph = std::unique_ptr<alsim_graph, Deleter<alsim_graph, alsim_graph_free>>;
using Schedule =
    std::unique_ptr<alsim_schedule, Deleter<alsim_schedule, alsim_schedule_free>>;
using Task = std::unique_ptr<alsim_task, Deleter<alsim_task, alsim_task_free>>;
using Algorithm =
    std::unique_ptr<alsim_algorithm, Deleter<alsim_algorithm, alsim_algorithm_free>>;
using Report = std::unique_ptr<alsim_report, Deleter<alsim_report, alsim_report_free>>;

std::string take_string(char* raw) {
  std::string out(raw);
  alsim_string_free(raw);
  return out;
}

// Everything a run depends on. Echoed verbatim into every report, and
// accepted back through --config.
struct RunConfig {
  std::string graph;
  std::string task;
  std::string algo;
  std::string model = "local";
  bool transform = false;
  std::string schedule = "sync";
  std::uint64_t id_bound = 0;  // 0: the graph's own bound
  bool shuffle_ids = false;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
};

Json config_to_json(const RunConfig& c) {
  return Json{{"graph", c.graph},       {"task", c.task},
              {"algo", c.algo},         {"model", c.model},
              {"transform", c.transform}, {"schedule", c.schedule},
              {"N", c.id_bound},        {"shuffle_ids", c.shuffle_ids},
              {"format", c.format},     {"seed", c.seed},
              {"trials", c.trials}};
}

void merge_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw CliError{ALSIM_E_IO, "cannot open config '" + path + "'"};
  Json j;
  try {
    j = Json::parse(in);
    // A report is accepted as its own config.
    if (j.contains("config")) j = j.at("config");
    if (j.contains("graph")) c.graph = j.at("graph").get<std::string>();
    if (j.contains("task")) c.task = j.at("task").get<std::string>();
    if (j.contains("algo")) c.algo = j.at("algo").get<std::string>();
    if (j.contains("model")) c.model = j.at("model").get<std::string>();
    if (j.contains("transform")) c.transform = j.at("transform").get<bool>();
    if (j.contains("schedule")) c.schedule = j.at("schedule").get<std::string>();
    if (j.contains("N")) c.id_bound = j.at("N").get<std::uint64_t>();
    if (j.contains("shuffle_ids")) c.shuffle_ids = j.at("shuffle_ids").get<bool>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) c.trials = j.at("trials").get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw CliError{ALSIM_E_PARSE, std::string("bad config: ") + e.what()};
  }
}

alsim_model model_of(const std::string& name) {
  if (name == "local") return ALSIM_MODEL_LOCAL;
  if (name == "async") return ALSIM_MODEL_ASYNC;
  if (name == "decoupled") return ALSIM_MODEL_DECOUPLED;
  usage_error("unknown model '" + name + "' (expected local, async or decoupled)");
}

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

struct Setup {
  Graph graph;
  Task task;
  Algorithm algo;
  alsim_run_options options{};
};

Setup prepare(const RunConfig& c, bool need_task) {
  if (c.graph.empty()) usage_error("--graph is required");
  if (c.algo.empty()) usage_error("--algo is required");
  if (need_task && c.task.empty()) usage_error("--task is required");
  if (c.format != "json" && c.format != "csv")
    usage_error("--format must be json or csv");

  Setup s;
  alsim_graph* g = nullptr;
  check(alsim_graph_parse(c.graph.c_str(), c.seed, &g));
  s.graph.reset(g);
  if (c.shuffle_ids) {
    const std::uint64_t bound = c.id_bound ? c.id_bound : alsim_graph_id_bound(g);
    alsim_graph* shuffled = nullptr;
    check(alsim_graph_shuffle_ids(g, c.seed, bound, &shuffled));
    s.graph.reset(shuffled);
  }
  if (!c.task.empty()) {
    alsim_task* t = nullptr;
    check(alsim_task_parse(c.task.c_str(), &t));
    s.task.reset(t);
  }
  alsim_algorithm* a = nullptr;
  check(alsim_algorithm_parse(c.algo.c_str(), &a));
  s.algo.reset(a);

  s.options.model = model_of(c.model);
  s.options.transform = c.transform ? 1 : 0;
  s.options.id_bound = c.id_bound;
  return s;
}

Schedule parse_schedule(const std::string& spec, const alsim_graph* g,
                        std::uint64_t seed) {
  alsim_schedule* raw = nullptr;
  check(alsim_schedule_parse(spec.c_str(), g, seed, &raw));
  return Schedule(raw);
}

Json wake_json(std::int64_t wake) {
  return wake == ALSIM_NEVER ? Json("never") : Json(wake);
}

Json nodes_json(const alsim_report* r) {
  Json nodes = Json::array();
  for (size_t v = 0; v < alsim_report_node_count(r); ++v) {
    alsim_node_result n;
    check(alsim_report_node(r, v, &n));
    nodes.push_back({{"node", v},
                     {"id", n.id},
                     {"wake", wake_json(n.wake)},
                     {"fate", n.crashed ? "crash" : "correct"},
                     {"visible", n.visible},
                     {"output", n.has_output ? Json(n.output) : Json(nullptr)}});
  }
  return nodes;
}

const char* verdict_name(alsim_verdict v) {
  switch (v) {
    case ALSIM_VERDICT_PASS: return "pass";
    case ALSIM_VERDICT_FAIL: return "fail";
    default: return "none";
  }
}

std::string run_csv(const Json& report) {
  std::ostringstream out;
  out << "# verdict=" << report["verdict"].get<std::string>()
      << " witness=" << report["witness"].dump() << " tau=" << report["tau"].dump()
      << " radius=" << report["radius"].dump() << "\n";
  out << "node,id,wake,fate,visible,output\n";
  for (const Json& n : report["nodes"]) {
    out << n["node"].dump() << ',' << n["id"].dump() << ','
        << (n["wake"].is_string() ? n["wake"].get<std::string>() : n["wake"].dump())
        << ',' << n["fate"].get<std::string>() << ',' << n["visible"].dump() << ','
        << (n["output"].is_null() ? std::string() : n["output"].dump()) << "\n";
  }
  return out.str();
}

std::string flat_csv(const Json& report) {
  std::ostringstream out;
  std::string header, row;
  for (const auto& [key, value] : report.items()) {
    if (value.is_object() || value.is_array()) continue;
    header += (header.empty() ? "" : ",") + key;
    row += (row.empty() ? "" : ",") +
           (value.is_string() ? value.get<std::string>() : value.dump());
  }
  out << header << "\n" << row << "\n";
  return out.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CliError{ALSIM_E_IO, "cannot write '" + out_path + "'"};
  out << text;
}

struct TraceFile {
  std::ofstream out;
  static void write(const char* line, void* user) {
    static_cast<TraceFile*>(user)->out << line << '\n';
  }
};

int cmd_run(const RunConfig& c, const std::string& out_path,
            const std::string& trace_path) {
  Setup s = prepare(c, /*need_task=*/true);
  if (starts_with(c.schedule, "enumerate"))
    usage_error("enumeration schedules belong to the enumerate command");
  Schedule schedule;
  if (s.options.model != ALSIM_MODEL_LOCAL)
    schedule = parse_schedule(c.schedule, s.graph.get(), c.seed);

  TraceFile trace;
  if (!trace_path.empty()) {
    trace.out.open(trace_path);
    if (!trace.out) throw CliError{ALSIM_E_IO, "cannot write '" + trace_path + "'"};
    s.options.trace = &TraceFile::write;
    s.options.trace_user = &trace;
  }

  alsim_report* raw = nullptr;
  check(alsim_run(s.graph.get(), schedule.get(), s.task.get(), s.algo.get(),
                  &s.options, &raw));
  Report report(raw);

  std::uint64_t tau = 0;
  const bool has_tau = alsim_report_tau(raw, &tau);
  const alsim_verdict verdict = alsim_report_verdict(raw);
  const std::int64_t witness = alsim_report_witness(raw);
  Json j{{"command", "run"},
         {"config", config_to_json(c)},
         {"verdict", verdict_name(verdict)},
         {"witness", witness >= 0 ? Json(witness) : Json(nullptr)},
         {"N", alsim_report_id_bound(raw)},
         {"tau", has_tau ? Json(tau) : Json(nullptr)},
         {"snapshot_radius",
          has_tau || s.options.model != ALSIM_MODEL_LOCAL ? Json(alsim_report_radius(raw))
                                                          : Json(nullptr)},
         {"radius", alsim_report_radius(raw)},
         {"nodes", nodes_json(raw)},
         {"wall_ms", alsim_report_wall_ms(raw)}};
  emit(c.format == "csv" ? run_csv(j) : j.dump(2) + "\n", out_path);
  return verdict == ALSIM_VERDICT_FAIL ? kExitFail : kExitPass;
}

int cmd_enumerate(const RunConfig& c, const std::string& out_path, unsigned workers) {
  Setup s = prepare(c, /*need_task=*/true);
  alsim_enumeration e{};
  check(alsim_enumeration_parse(c.schedule.c_str(), &e));
  std::uint64_t count = 0;
  check(alsim_enumeration_count(s.graph.get(), &e, &count));

  alsim_enumerate_summary summary{};
  check(alsim_enumerate(s.graph.get(), s.task.get(), s.algo.get(), &s.options, &e,
                        workers, &summary));

  Json counterexample = nullptr;
  if (summary.has_counterexample) {
    alsim_schedule* raw = nullptr;
    check(alsim_enumeration_at(s.graph.get(), &e, summary.counterexample_index, &raw));
    Schedule bad(raw);
    char* text = nullptr;
    check(alsim_schedule_to_json(bad.get(), &text));
    counterexample = {{"index", summary.counterexample_index},
                      {"witness", summary.witness},
                      {"schedule", Json::parse(take_string(text))}};
  }
  Json j{{"command", "enumerate"},
         {"config", config_to_json(c)},
         {"verdict", summary.failed == 0 ? "pass" : "fail"},
         {"total", summary.total},
         {"passed", summary.passed},
         {"failed", summary.failed},
         {"counterexample", counterexample}};
  emit(c.format == "csv" ? flat_csv(j) : j.dump(2) + "\n", out_path);
  return summary.failed == 0 ? kExitPass : kExitFail;
}

// The random: spec with any seed= removed; trials reseed it.
std::string without_seed(const std::string& spec, std::optional<std::uint64_t>& seed) {
  if (!starts_with(spec, "random")) return spec;
  std::string head = "random:", rest = spec.size() > 7 ? spec.substr(7) : "";
  std::string kept;
  std::stringstream items(rest);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (starts_with(item, "seed=")) {
      try {
        seed = std::stoull(item.substr(5));
      } catch (const std::exception&) {
        throw CliError{ALSIM_E_PARSE, "bad seed in '" + spec + "'"};
      }
      continue;
    }
    kept += (kept.empty() ? "" : ",") + item;
  }
  return head + kept;
}

int cmd_compare(const RunConfig& c, const std::string& out_path,
                const std::string& trace_path) {
  Setup s = prepare(c, /*need_task=*/false);
  if (c.trials == 0) usage_error("--trials must be positive");
  if (starts_with(c.schedule, "enumerate"))
    usage_error("compare runs fixed or random schedules");

  std::optional<std::uint64_t> spec_seed;
  const std::string base_spec = without_seed(c.schedule, spec_seed);
  const std::uint64_t base_seed = spec_seed.value_or(c.seed);
  const bool random = starts_with(c.schedule, "random");
  // LOCAL algorithms are always compared through the transform.
  std::uint64_t unused = 0;
  const int transform =
      c.transform || alsim_algorithm_round_bound(s.algo.get(), 1, &unused) == ALSIM_OK;

  TraceFile trace;
  if (!trace_path.empty()) {
    trace.out.open(trace_path);
    if (!trace.out) throw CliError{ALSIM_E_IO, "cannot write '" + trace_path + "'"};
  }

  std::uint64_t mismatched_trials = 0;
  Json first_mismatch = nullptr;
  Json last_nodes = Json::array();
  for (std::uint64_t k = 0; k < c.trials; ++k) {
    const std::uint64_t seed = random ? base_seed + k : base_seed;
    Schedule schedule = parse_schedule(base_spec, s.graph.get(), seed);

    alsim_run_options async_opts = s.options;
    async_opts.model = ALSIM_MODEL_ASYNC;
    async_opts.transform = transform;
    async_opts.trace = nullptr;
    alsim_run_options decoupled_opts = async_opts;
    decoupled_opts.model = ALSIM_MODEL_DECOUPLED;
    if (!trace_path.empty() && k + 1 == c.trials) {
      decoupled_opts.trace = &TraceFile::write;
      decoupled_opts.trace_user = &trace;
    }

    alsim_report *ra = nullptr, *rd = nullptr;
    check(alsim_run(s.graph.get(), schedule.get(), nullptr, s.algo.get(), &async_opts, &ra));
    Report async_report(ra);
    check(alsim_run(s.graph.get(), schedule.get(), nullptr, s.algo.get(), &decoupled_opts,
                    &rd));
    Report decoupled_report(rd);

    last_nodes = Json::array();
    bool identical = true;
    for (size_t v = 0; v < alsim_report_node_count(ra); ++v) {
      alsim_node_result a, d;
      check(alsim_report_node(ra, v, &a));
      check(alsim_report_node(rd, v, &d));
      const Json ao = a.has_output ? Json(a.output) : Json(nullptr);
      const Json dout = d.has_output ? Json(d.output) : Json(nullptr);
      const bool equal = ao == dout;
      last_nodes.push_back({{"node", v}, {"async", ao}, {"decoupled", dout}, {"equal", equal}});
      if (!equal && identical) {
        identical = false;
        if (first_mismatch.is_null()) {
          char* text = nullptr;
          check(alsim_schedule_to_json(schedule.get(), &text));
          first_mismatch = {{"trial", k},
                            {"seed", seed},
                            {"node", v},
                            {"async", ao},
                            {"decoupled", dout},
                            {"schedule", Json::parse(take_string(text))}};
        }
      }
    }
    if (!identical) ++mismatched_trials;
  }

  Json j{{"command", "compare"},
         {"config", config_to_json(c)},
         {"verdict", mismatched_trials == 0 ? "pass" : "fail"},
         {"identical", mismatched_trials == 0},
         {"trials", c.trials},
         {"mismatched_trials", mismatched_trials},
         {"first_mismatch", first_mismatch},
         {"nodes", last_nodes}};
  emit(c.format == "csv" ? flat_csv(j) : j.dump(2) + "\n", out_path);
  return mismatched_trials == 0 ? kExitPass : kExitFail;
}

int exit_code_for(alsim_status status) {
  return status == ALSIM_E_SIZE_LIMIT ? kExitSizeLimit : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alsim: LOCAL, AsyncLocal and DECOUPLED network-computing simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(alsim_version()));

  RunConfig flags;
  std::string config_path, out_path, trace_path;
  unsigned workers = 0;
  std::uint64_t max_wake = 0;
  bool never = false, crash = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config (or a previous report)");
    sub->add_option("--graph", flags.graph, "ring:<n>, torus:<r>x<c>, path:<n>, random:n=..,p=.., or JSON");
    sub->add_option("--task", flags.task, "coloring:<c> or mis");
    sub->add_option("--algo", flags.algo, "cv3, universal:<task>, const:<label>, digest:<t>");
    sub->add_option("--model", flags.model, "local, async or decoupled");
    sub->add_flag("--transform", flags.transform, "run a LOCAL algorithm asynchronously");
    sub->add_option("--schedule", flags.schedule, "sync, random:..., enumerate:..., or JSON");
    sub->add_option("--N", flags.id_bound, "identifier bound N");
    sub->add_flag("--shuffle-ids", flags.shuffle_ids, "draw distinct random ids below N");
    sub->add_option("--format", flags.format, "json or csv");
    sub->add_option("--seed", flags.seed, "seed for every random choice");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };

  CLI::App* run = app.add_subcommand("run", "run one configuration and check it");
  add_common(run);
  run->add_option("--trace", trace_path, "decoupled delivery trace file");

  CLI::App* en = app.add_subcommand("enumerate", "run every schedule of a small space");
  add_common(en);
  en->add_option("--max-wake", max_wake, "enumerate wake rounds 0..W");
  en->add_flag("--never", never, "include never-waking processes");
  en->add_flag("--crash", crash, "include crash-before-output processes");
  en->add_option("--workers", workers, "worker threads (0: all cores)");

  CLI::App* cmp = app.add_subcommand("compare", "async versus decoupled, node by node");
  add_common(cmp);
  cmp->add_option("--trials", flags.trials, "random schedules to try, reseeding each");
  cmp->add_option("--trace", trace_path, "decoupled delivery trace of the last trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunConfig c;
    if (!config_path.empty()) merge_config_file(config_path, c);
    // Explicit flags override the config file.
    auto given = [&](const char* name) { return sub->count(name) > 0; };
    if (given("--graph")) c.graph = flags.graph;
    if (given("--task")) c.task = flags.task;
    if (given("--algo")) c.algo = flags.algo;
    if (given("--model")) c.model = flags.model;
    if (given("--transform")) c.transform = flags.transform;
    if (given("--schedule")) c.schedule = flags.schedule;
    if (given("--N")) c.id_bound = flags.id_bound;
    if (given("--shuffle-ids")) c.shuffle_ids = flags.shuffle_ids;
    if (given("--format")) c.format = flags.format;
    if (given("--seed")) c.seed = flags.seed;
    if (sub == cmp && given("--trials")) c.trials = flags.trials;

    if (sub == run) return cmd_run(c, out_path, trace_path);
    if (sub == en) {
      if (given("--max-wake") || given("--never") || given("--crash")) {
        c.schedule = "enumerate:maxwake=" + std::to_string(max_wake);
        if (never) c.schedule += ",never";
        if (crash) c.schedule += ",crash";
      } else if (!starts_with(c.schedule, "enumerate")) {
        usage_error("enumerate needs --schedule enumerate:... or --max-wake");
      }
      return cmd_enumerate(c, out_path, workers);
    }
    if (sub == cmp) {
      if (!given("--model") && config_path.empty()) c.model = "async";
      return cmd_compare(c, out_path, trace_path);
    }
  } catch (const CliError& e) {
    std::cerr << "alsim: " << alsim_status_name(e.status) << ": " << e.message << "\n";
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "alsim: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
