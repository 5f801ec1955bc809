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

#include "core/async_engine.hpp"

#include <algorithm>

namespace alsim {

std::size_t SnapshotView::visible_count() const {
  return static_cast<std::size_t>(
      std::count_if(visible.begin(), visible.end(),
                    [](const auto& v) { return v.has_value(); }));
}

const std::optional<VisibleInfo>& SnapshotView::info(NodeIndex node) const {
  static const std::optional<VisibleInfo> kNone;
  auto local = structure.local_index(node);
  return local ? visible[*local] : kNone;
}

SnapshotView snapshot(const PortGraph& g, const Schedule& s, NodeIndex v,
                      std::uint64_t t) {
  if (!s.awake(v))
    fail(ErrorCode::kContract,
         "snapshot requested for node " + std::to_string(v) +
             ", which never wakes");
  SnapshotView view;
  view.observer = v;
  view.taken_at = *s.wake(v);
  view.radius = t;
  view.structure = ball(g, v, t);
  view.visible.resize(view.structure.size());
  for (std::uint32_t i = 0; i < view.structure.size(); ++i) {
    const BallMember& m = view.structure.member(i);
    const Wake w = s.wake(m.node);
    if (w && *w + m.dist <= view.taken_at + t)
      view.visible[i] = VisibleInfo{g.id(m.node), *w};
  }
  return view;
}

std::vector<SnapshotEntry> snapshot_set(const PortGraph& g, const Schedule& s,
                                        NodeIndex v, std::uint64_t rho,
                                        Round theta) {
  std::vector<SnapshotEntry> out;
  const Ball b = ball(g, v, rho);
  for (const BallMember& m : b.members()) {
    const Wake w = s.wake(m.node);
    if (w && *w + m.dist <= rho + theta)
      out.push_back({m.node, g.id(m.node), *w, m.dist});
  }
  return out;
}

AsyncRun run_async(const PortGraph& g, const Schedule& s,
                   const AsyncAlgorithm& algo, Id id_bound) {
  if (s.node_count() != g.node_count())
    fail(ErrorCode::kContract, "schedule does not match the graph");
  validate_ids(g.ids(), id_bound);
  AsyncRun run;
  run.radius = algo.radius(id_bound);
  run.labels.assign(g.node_count(), std::nullopt);
  run.visible_counts.assign(g.node_count(), 0);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (!s.awake(v)) continue;
    SnapshotView view = snapshot(g, s, v, run.radius);
    run.visible_counts[v] = view.visible_count();
    if (s.fate(v) == Fate::kCrashBeforeOutput) continue;
    run.labels[v] = algo.rule(view);
  }
  return run;
}

}  // namespace alsim
