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

#include "core/local_engine.hpp"

#include "core/graph.hpp"

namespace alsim {

std::vector<Id> ball_ids(const Ball& b, std::span<const Id> ids) {
  std::vector<Id> out;
  out.reserve(b.size());
  for (const auto& m : b.members()) out.push_back(ids[m.node]);
  return out;
}

std::vector<Label> run_local(const PortGraph& g, const LocalAlgorithm& algo,
                             Id id_bound, std::span<const Id> ids) {
  if (ids.size() != g.node_count())
    fail(ErrorCode::kContract, "identifier table does not cover every node");
  try {
    validate_ids(ids, id_bound);
  } catch (const Error& e) {
    fail(ErrorCode::kContract, e.what());
  }
  const std::uint64_t t = algo.round_bound(id_bound);
  std::vector<Label> out;
  out.reserve(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    Ball b = ball(g, v, t);
    out.push_back(algo.rule(b, ball_ids(b, ids), id_bound));
  }
  return out;
}

}  // namespace alsim
