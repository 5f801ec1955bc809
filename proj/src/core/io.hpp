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

#pragma once

// File formats and command-line shorthands.
//
//   graph     {"n": 4, "N": 10, "ids": [...], "edges": [[u, pu, v, pv], ...]}
//             ring:<n>  torus:<rows>x<cols>  path:<n>  random:n=<n>[,p=<p>][,N=<N>]
//   schedule  {"wake": {"<node>": int|"never"}, "fate": {"<node>": "correct"|"crash"}}
//             sync  random:seed=S,window=W,never=P1,crash=P2
//             enumerate:maxwake=W[,never][,crash]
//   labeling  {"<node>": label|null}
//   task      coloring:<c>  mis
//   algorithm cv3  universal:<task>  const:<label>  digest:<t>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "core/async_engine.hpp"
#include "core/graph.hpp"
#include "core/lcl.hpp"
#include "core/local_engine.hpp"
#include "core/schedule.hpp"

namespace alsim {

using Json = nlohmann::json;

Json graph_to_json(const PortGraph& g);
PortGraph graph_from_json(const Json& j);

Json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j, std::size_t node_count);

Json labeling_to_json(const PartialLabeling& labeling);
PartialLabeling labeling_from_json(const Json& j, std::size_t node_count);

// Reads a whole file; kIo on failure.
std::string read_text_file(const std::string& path);

// Shorthand, inline JSON (leading '{'), or a path to a JSON file. Shorthand
// graphs get ids 0..n-1 and id bound n; `seed` feeds random:.
PortGraph parse_graph_spec(std::string_view spec, std::uint64_t seed);

struct ScheduleSpec {
  std::optional<Schedule> fixed;
  std::optional<RandomScheduleParams> random;  // set when spec was random:
  std::optional<EnumerationParams> enumeration;
};

// A random: spec without seed= takes `default_seed`.
ScheduleSpec parse_schedule_spec(std::string_view spec, const PortGraph& g,
                                 std::uint64_t default_seed);

LclTask parse_task_spec(std::string_view spec);

struct AlgorithmChoice {
  std::string spec;
  std::variant<LocalAlgorithm, AsyncAlgorithm> impl;
  bool ring_only = false;

  bool is_local() const { return impl.index() == 0; }
};

AlgorithmChoice parse_algorithm_spec(std::string_view spec);

}  // namespace alsim
