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

// The AsyncLocal model. A process waking at round time(v) takes one atomic
// snapshot of radius t: the full structure of B(v, t), plus the identity and
// wake time of each member w with time(w) + dist(v, w) <= time(v) + t. Its
// output is a function of that snapshot alone.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/lcl.hpp"
#include "core/schedule.hpp"

namespace alsim {

struct VisibleInfo {
  Id id;
  Round wake;

  friend bool operator==(const VisibleInfo&, const VisibleInfo&) = default;
};

struct SnapshotView {
  NodeIndex observer = 0;
  Round taken_at = 0;
  std::uint64_t radius = 0;
  Ball structure;
  // Parallel to structure.members(); empty for members that are not visible.
  std::vector<std::optional<VisibleInfo>> visible;

  std::size_t visible_count() const;
  const std::optional<VisibleInfo>& info(NodeIndex node) const;

  friend bool operator==(const SnapshotView&, const SnapshotView&) = default;
};

struct AsyncAlgorithm {
  std::string name;
  std::function<std::uint64_t(Id)> radius;  // id bound -> snapshot radius
  std::function<Label(const SnapshotView&)> rule;
  // Set by the transform: the wrapped algorithm's round bound at N^2.
  std::optional<std::uint64_t> tau;
};

// Throws kContract if v never wakes.
SnapshotView snapshot(const PortGraph& g, const Schedule& s, NodeIndex v,
                      std::uint64_t t);

struct SnapshotEntry {
  NodeIndex node;
  Id id;
  Round wake;
  std::uint32_t dist;

  friend bool operator==(const SnapshotEntry&, const SnapshotEntry&) = default;
};

// S_v(rho, theta): members w of B(v, rho) that wake and satisfy
// wake(w) + dist(v, w) <= rho + theta, in ascending node order. Defined
// whether or not v itself wakes.
std::vector<SnapshotEntry> snapshot_set(const PortGraph& g, const Schedule& s,
                                        NodeIndex v, std::uint64_t rho,
                                        Round theta);

struct AsyncRun {
  PartialLabeling labels;
  std::vector<std::size_t> visible_counts;  // 0 for nodes that never wake
  std::uint64_t radius = 0;
};

// Never-waking and crashing nodes output nothing; crashing nodes still show up
// in other nodes' snapshots.
AsyncRun run_async(const PortGraph& g, const Schedule& s,
                   const AsyncAlgorithm& algo, Id id_bound);

}  // namespace alsim
