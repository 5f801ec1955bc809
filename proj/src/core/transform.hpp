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

// Running a LOCAL algorithm under asynchronous, crash-prone wake-ups.
//
// With tau = t(N^2), every node v owns a block of local identifiers
// id(v) * N + i for the i-th node of a port-ordered BFS of B(v, tau). A node's
// virtual identifier is the local identifier handed to it by the awake node of
// its tau-ball that is reached earliest (wake time plus distance, ties by
// identity). Virtual identifiers are distinct, lie in [0, N^2), and every
// awake node can compute them for its whole tau-ball from a snapshot of radius
// 3 * tau, whatever its wake time. The wrapped algorithm then runs on B(v, tau)
// labeled with virtual identifiers.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "core/async_engine.hpp"
#include "core/local_engine.hpp"

namespace alsim {

// N^2, or kContract on overflow.
Id squared_id_bound(Id id_bound);

class LocalIdMap {
 public:
  LocalIdMap(NodeIndex owner, Id owner_id, Id id_bound,
             std::vector<NodeIndex> order);

  NodeIndex owner() const { return owner_; }
  // Members in BFS order; order()[i] receives base + i.
  std::span<const NodeIndex> order() const { return order_; }
  bool contains(NodeIndex node) const { return index_.count(node) != 0; }
  Id at(NodeIndex node) const;

 private:
  NodeIndex owner_;
  Id base_;
  std::vector<NodeIndex> order_;
  std::unordered_map<NodeIndex, Id> index_;
};

// Needs only the owner's identifier and the structure of its ball.
LocalIdMap local_ids(Id owner_id, const Ball& b, Id id_bound);

struct Candidate {
  NodeIndex node;
  Id id;
  Round wake;
  std::uint64_t dist;  // to the node being named
};

// argmin of (wake + dist, id). Throws kContract on an empty set.
NodeIndex elect_vstar(std::span<const Candidate> candidates);

// Virtual identifier of `target`, computed by the observer of `view` from the
// snapshot alone. Requires view.radius >= 3 * tau and
// dist(observer, target) <= tau.
Id virtual_id(NodeIndex target, const SnapshotView& view, std::uint64_t tau,
              Id id_bound);

// Whole-graph reference assignment: theta* is the least round at which
// S_v(tau, theta) is non-empty, v* is elected over S_v(tau, theta*). Nodes
// whose tau-ball never wakes get id(v) * N.
std::vector<Id> compute_idvirt_global(const PortGraph& g, const Schedule& s,
                                      std::uint64_t tau, Id id_bound);

// Snapshot radius 3 * algo.round_bound(N^2); the rule runs `algo` on
// B(v, tau) with virtual identifiers and id bound N^2.
AsyncAlgorithm transform(LocalAlgorithm algo, Id id_bound);

}  // namespace alsim
