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

#include "core/transform.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

namespace alsim {

Id squared_id_bound(Id id_bound) {
  if (id_bound != 0 && id_bound > std::numeric_limits<Id>::max() / id_bound)
    fail(ErrorCode::kContract, "id bound squared overflows");
  return id_bound * id_bound;
}

LocalIdMap::LocalIdMap(NodeIndex owner, Id owner_id, Id id_bound,
                       std::vector<NodeIndex> order)
    : owner_(owner), base_(owner_id * id_bound), order_(std::move(order)) {
  if (owner_id >= id_bound || order_.size() > id_bound)
    fail(ErrorCode::kContract, "local identifiers would leave [0, N^2)");
  for (std::size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = base_ + i;
}

Id LocalIdMap::at(NodeIndex node) const {
  auto it = index_.find(node);
  if (it == index_.end())
    fail(ErrorCode::kContract, "node " + std::to_string(node) +
                                   " is outside the owner's ball");
  return it->second;
}

LocalIdMap local_ids(Id owner_id, const Ball& b, Id id_bound) {
  return LocalIdMap(b.center(), owner_id, id_bound, bfs_order(b));
}

NodeIndex elect_vstar(std::span<const Candidate> candidates) {
  if (candidates.empty()) fail(ErrorCode::kContract, "no candidate to elect");
  auto key = [](const Candidate& c) { return std::make_tuple(c.wake + c.dist, c.id); };
  return std::min_element(candidates.begin(), candidates.end(),
                          [&](const Candidate& a, const Candidate& b) {
                            return key(a) < key(b);
                          })
      ->node;
}

Id virtual_id(NodeIndex target, const SnapshotView& view, std::uint64_t tau,
              Id id_bound) {
  if (view.radius < 3 * tau)
    fail(ErrorCode::kContract, "snapshot radius is below 3 * tau");
  auto target_local = view.structure.local_index(target);
  if (!target_local || view.structure.member(*target_local).dist > tau)
    fail(ErrorCode::kContract, "target is not within tau of the observer");

  // S_target(tau, taken_at), read off the snapshot. Members of the target's
  // tau-ball lie within 2 * tau of the observer, so anyone in the set is
  // visible and anyone invisible is outside it.
  const Ball around_target = view.structure.sub_ball(target, tau);
  std::vector<Candidate> candidates;
  for (const BallMember& m : around_target.members()) {
    const auto& info = view.info(m.node);
    if (info && info->wake + m.dist <= tau + view.taken_at)
      candidates.push_back({m.node, info->id, info->wake, m.dist});
  }
  if (candidates.empty())
    fail(ErrorCode::kContract, "observer missing from the target's snapshot set");

  const NodeIndex vstar = elect_vstar(candidates);
  const Id vstar_id = view.info(vstar)->id;
  return local_ids(vstar_id, view.structure.sub_ball(vstar, tau), id_bound)
      .at(target);
}

std::vector<Id> compute_idvirt_global(const PortGraph& g, const Schedule& s,
                                      std::uint64_t tau, Id id_bound) {
  std::vector<Id> out(g.node_count());
  const Round latest = s.max_wake().value_or(0);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    // Once theta reaches the latest wake round every waking member of the
    // tau-ball is in the set, so an empty set there means empty forever.
    std::vector<SnapshotEntry> set;
    for (Round theta = 0; theta <= latest; ++theta) {
      set = snapshot_set(g, s, v, tau, theta);
      if (!set.empty()) break;
    }
    if (set.empty()) {
      out[v] = g.id(v) * id_bound;
      continue;
    }
    std::vector<Candidate> candidates;
    for (const SnapshotEntry& e : set)
      candidates.push_back({e.node, e.id, e.wake, e.dist});
    const NodeIndex vstar = elect_vstar(candidates);
    out[v] = local_ids(g.id(vstar), ball(g, vstar, tau), id_bound).at(v);
  }
  return out;
}

AsyncAlgorithm transform(LocalAlgorithm algo, Id id_bound) {
  const Id virtual_bound = squared_id_bound(id_bound);
  const std::uint64_t tau = algo.round_bound(virtual_bound);
  if (tau > std::numeric_limits<std::uint64_t>::max() / 3)
    fail(ErrorCode::kContract, "snapshot radius overflows");

  AsyncAlgorithm out;
  out.name = "transform(" + algo.name + ")";
  out.tau = tau;
  out.radius = [tau, id_bound](Id n) {
    if (n != id_bound)
      fail(ErrorCode::kContract, "transformed algorithm was built for id bound " +
                                     std::to_string(id_bound));
    return 3 * tau;
  };
  out.rule = [algo = std::move(algo), tau, id_bound,
              virtual_bound](const SnapshotView& view) -> Label {
    const Ball local = view.structure.sub_ball(view.observer, tau);
    std::vector<Id> ids;
    ids.reserve(local.size());
    for (const BallMember& m : local.members())
      ids.push_back(virtual_id(m.node, view, tau, id_bound));
    return algo.rule(local, ids, virtual_bound);
  };
  return out;
}

}  // namespace alsim
