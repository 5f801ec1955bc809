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

#include "core/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "core/algorithms.hpp"
#include "core/rng.hpp"

namespace alsim {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  fail(ErrorCode::kParse, what);
}

std::uint64_t to_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    parse_error(std::string("expected a non-negative integer for ") + what +
                ", got '" + std::string(text) + "'");
  return v;
}

std::int64_t to_i64(std::string_view text, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    parse_error(std::string("expected an integer for ") + what + ", got '" +
                std::string(text) + "'");
  return v;
}

double to_probability(std::string_view text, const char* what) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    parse_error(std::string("expected a number for ") + what + ", got '" + s + "'");
  if (v < 0.0 || v > 1.0)
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + " must be a probability in [0, 1]");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

// "a=1,b,c=2" -> {a: "1", b: "", c: "2"}
std::map<std::string, std::string, std::less<>> key_values(std::string_view text) {
  std::map<std::string, std::string, std::less<>> out;
  if (text.empty()) return out;
  for (std::string_view item : split(text, ',')) {
    auto eq = item.find('=');
    std::string key(item.substr(0, eq));
    std::string value = eq == std::string_view::npos ? "" : std::string(item.substr(eq + 1));
    if (key.empty()) parse_error("empty key in '" + std::string(text) + "'");
    if (!out.emplace(key, value).second) parse_error("duplicate key '" + key + "'");
  }
  return out;
}

bool starts_with(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

Json load_json(std::string_view spec) {
  std::string text = !spec.empty() && spec.front() == '{'
                         ? std::string(spec)
                         : read_text_file(std::string(spec));
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

std::size_t node_key(const std::string& key, std::size_t n) {
  std::uint64_t v = to_u64(key, "node key");
  if (v >= n) parse_error("node key " + key + " out of range");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json graph_to_json(const PortGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.port_u, e.v, e.port_v});
  return Json{{"n", g.node_count()},
              {"N", g.id_bound()},
              {"ids", std::vector<Id>(g.ids().begin(), g.ids().end())},
              {"edges", edges}};
}

PortGraph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto bound = j.at("N").get<Id>();
    auto ids = j.at("ids").get<std::vector<Id>>();
    if (ids.size() != n) fail(ErrorCode::kInvalidIds, "\"ids\" must list n identifiers");
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 4) parse_error("each edge is [u, port_u, v, port_v]");
      edges.push_back({e[0].get<NodeIndex>(), e[1].get<Port>(), e[2].get<NodeIndex>(),
                       e[3].get<Port>()});
    }
    return PortGraph::from_edges(std::move(ids), bound, edges);
  } catch (const Json::exception& e) {
    parse_error(std::string("malformed graph JSON: ") + e.what());
  }
}

Json schedule_to_json(const Schedule& s) {
  Json wake = Json::object(), fate = Json::object();
  for (NodeIndex v = 0; v < s.node_count(); ++v) {
    const std::string key = std::to_string(v);
    if (s.wake(v))
      wake[key] = *s.wake(v);
    else
      wake[key] = "never";
    fate[key] = s.fate(v) == Fate::kCorrect ? "correct" : "crash";
  }
  return Json{{"wake", wake}, {"fate", fate}};
}

Schedule schedule_from_json(const Json& j, std::size_t node_count) {
  try {
    std::vector<Wake> wake(node_count);
    std::vector<Fate> fate(node_count, Fate::kCorrect);
    std::vector<bool> seen(node_count, false);
    for (const auto& [key, value] : j.at("wake").items()) {
      const std::size_t v = node_key(key, node_count);
      seen[v] = true;
      if (value.is_string()) {
        if (value.get<std::string>() != "never")
          parse_error("wake must be an integer or \"never\"");
      } else {
        wake[v] = value.get<Round>();
      }
    }
    for (std::size_t v = 0; v < node_count; ++v)
      if (!seen[v]) parse_error("schedule has no wake entry for node " + std::to_string(v));
    if (j.contains("fate")) {
      for (const auto& [key, value] : j.at("fate").items()) {
        const std::size_t v = node_key(key, node_count);
        const auto text = value.get<std::string>();
        if (text == "crash")
          fate[v] = Fate::kCrashBeforeOutput;
        else if (text != "correct")
          parse_error("fate must be \"correct\" or \"crash\"");
      }
    }
    return Schedule(std::move(wake), std::move(fate));
  } catch (const Json::exception& e) {
    parse_error(std::string("malformed schedule JSON: ") + e.what());
  }
}

Json labeling_to_json(const PartialLabeling& labeling) {
  Json out = Json::object();
  for (std::size_t v = 0; v < labeling.size(); ++v) {
    if (labeling[v])
      out[std::to_string(v)] = *labeling[v];
    else
      out[std::to_string(v)] = nullptr;
  }
  return out;
}

PartialLabeling labeling_from_json(const Json& j, std::size_t node_count) {
  try {
    PartialLabeling out(node_count);
    for (const auto& [key, value] : j.items()) {
      const std::size_t v = node_key(key, node_count);
      if (!value.is_null()) out[v] = value.get<Label>();
    }
    return out;
  } catch (const Json::exception& e) {
    parse_error(std::string("malformed labeling JSON: ") + e.what());
  }
}

PortGraph parse_graph_spec(std::string_view spec, std::uint64_t seed) {
  if (starts_with(spec, "ring:")) {
    auto n = to_u64(spec.substr(5), "ring size");
    return make_ring(iota_ids(n), n);
  }
  if (starts_with(spec, "path:")) {
    auto n = to_u64(spec.substr(5), "path length");
    return make_path(iota_ids(n), n);
  }
  if (starts_with(spec, "torus:")) {
    auto dims = split(spec.substr(6), 'x');
    if (dims.size() != 2) parse_error("torus shorthand is torus:<rows>x<cols>");
    auto rows = to_u64(dims[0], "torus rows");
    auto cols = to_u64(dims[1], "torus columns");
    return make_torus(rows, cols, iota_ids(rows * cols), rows * cols);
  }
  if (starts_with(spec, "random:")) {
    auto kv = key_values(spec.substr(7));
    if (!kv.count("n")) parse_error("random graph shorthand needs n=<nodes>");
    auto n = to_u64(kv.at("n"), "n");
    double p = kv.count("p") ? to_probability(kv.at("p"), "p") : 0.2;
    Id bound = kv.count("N") ? to_u64(kv.at("N"), "N") : n;
    for (const auto& [key, value] : kv)
      if (key != "n" && key != "p" && key != "N")
        parse_error("unknown random graph key '" + key + "'");
    Rng rng(seed);
    return make_random_connected(n, bound, p, rng);
  }
  return graph_from_json(load_json(spec));
}

ScheduleSpec parse_schedule_spec(std::string_view spec, const PortGraph& g,
                                 std::uint64_t default_seed) {
  ScheduleSpec out;
  if (spec == "sync") {
    out.fixed = sync_schedule(g);
    return out;
  }
  if (starts_with(spec, "random:") || spec == "random") {
    auto kv = key_values(spec.size() > 7 ? spec.substr(7) : std::string_view{});
    RandomScheduleParams params;
    params.seed = kv.count("seed") ? to_u64(kv.at("seed"), "seed") : default_seed;
    params.window = kv.count("window") ? to_u64(kv.at("window"), "window") : 0;
    params.p_never = kv.count("never") ? to_probability(kv.at("never"), "never") : 0.0;
    params.p_crash = kv.count("crash") ? to_probability(kv.at("crash"), "crash") : 0.0;
    for (const auto& [key, value] : kv)
      if (key != "seed" && key != "window" && key != "never" && key != "crash")
        parse_error("unknown random schedule key '" + key + "'");
    out.random = params;
    out.fixed = random_schedule(g, params);
    return out;
  }
  if (starts_with(spec, "enumerate:") || spec == "enumerate") {
    auto kv = key_values(spec.size() > 10 ? spec.substr(10) : std::string_view{});
    EnumerationParams params;
    for (const auto& [key, value] : kv) {
      if (key == "maxwake") {
        params.max_wake = to_u64(value, "maxwake");
      } else if (key == "never" && value.empty()) {
        params.include_never = true;
      } else if (key == "crash" && value.empty()) {
        params.include_crash = true;
      } else {
        parse_error("unknown enumerate key '" + key + "'");
      }
    }
    out.enumeration = params;
    return out;
  }
  out.fixed = schedule_from_json(load_json(spec), g.node_count());
  return out;
}

LclTask parse_task_spec(std::string_view spec) {
  if (spec == "mis") return maximal_independent_set();
  if (starts_with(spec, "coloring:")) {
    auto c = to_i64(spec.substr(9), "color count");
    if (c < 1) fail(ErrorCode::kInvalidArgument, "coloring needs at least one color");
    return proper_coloring(c);
  }
  parse_error("unknown task '" + std::string(spec) + "' (expected coloring:<c> or mis)");
}

AlgorithmChoice parse_algorithm_spec(std::string_view spec) {
  AlgorithmChoice out{std::string(spec), LocalAlgorithm{}, false};
  if (spec == "cv3") {
    out.impl = cv3();
    out.ring_only = true;
  } else if (starts_with(spec, "universal:")) {
    out.impl = universal(parse_task_spec(spec.substr(10)));
  } else if (starts_with(spec, "const:")) {
    out.impl = constant(to_i64(spec.substr(6), "constant label"));
  } else if (starts_with(spec, "digest:")) {
    out.impl = view_digest(to_u64(spec.substr(7), "digest radius"));
  } else {
    parse_error("unknown algorithm '" + std::string(spec) +
                "' (expected cv3, universal:<task>, const:<label> or digest:<t>)");
  }
  return out;
}

}  // namespace alsim
