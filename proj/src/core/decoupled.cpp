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

#include "core/decoupled.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace alsim {

std::vector<RouteHop> Message::route_history() const {
  std::vector<RouteHop> out;
  for (const RouteLink* link = route.get(); link; link = link->prev.get())
    out.push_back(link->hop);
  std::reverse(out.begin(), out.end());
  return out;
}

NetworkState::NetworkState(const PortGraph& g)
    : graph(&g),
      router_in(g.node_count()),
      q_out(g.node_count()),
      q_in(g.node_count()),
      status(g.node_count(), ProcessStatus::kAsleep) {}

namespace {

Message extended(const Message& m, RouteHop hop) {
  Message copy = m;
  copy.route = std::make_shared<const RouteLink>(
      RouteLink{hop, m.route, m.hops() + 1});
  return copy;
}

}  // namespace

void flood_round(NetworkState& state, const TraceSink& trace) {
  const PortGraph& g = *state.graph;
  const Round now = state.round;
  std::vector<std::vector<std::pair<Message, Port>>> next(g.node_count());

  auto send = [&](NodeIndex from, const Arc& arc, Message msg) {
    if (trace) {
      std::string line = "round=" + std::to_string(now + 1) +
                         " edge=" + std::to_string(from) + ":" +
                         std::to_string(arc.port) + "->" +
                         std::to_string(arc.target) + ":" +
                         std::to_string(arc.remote_port) +
                         " origin=" + std::to_string(msg.origin_id) +
                         " emitted=" + std::to_string(msg.emitted_at) +
                         " hops=" + std::to_string(msg.hops());
      trace(line);
    }
    state.q_in[arc.target].push_back({msg, now + 1, arc.remote_port});
    next[arc.target].emplace_back(std::move(msg), arc.remote_port);
    ++state.deliveries;
  };

  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    for (const auto& [msg, in_port] : state.router_in[v])
      for (const Arc& arc : g.arcs(v))
        if (arc.port != in_port) send(v, arc, extended(msg, {in_port, arc.port}));
  }
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    for (const auto& [id, wake] : state.q_out[v]) {
      Message msg{id, wake, now, nullptr};
      for (const Arc& arc : g.arcs(v)) send(v, arc, extended(msg, {0, arc.port}));
    }
    state.q_out[v].clear();
  }
  state.router_in = std::move(next);
  state.round = now + 1;
}

namespace {

// Walks a delivery's route backwards over the known structure to find the
// node that emitted it.
NodeIndex locate_origin(const PortGraph& g, NodeIndex reader,
                        const Delivery& d) {
  auto fail_route = [] {
    fail(ErrorCode::kInternal, "route history inconsistent with the network");
  };
  auto hop_target = [&](NodeIndex x, Port p) {
    auto y = g.neighbor(x, p);
    if (!y) fail_route();
    return *y;
  };
  NodeIndex prev = reader;
  NodeIndex x = hop_target(reader, d.arrival_port);
  for (const RouteLink* link = d.message.route.get(); link;
       link = link->prev.get()) {
    if (hop_target(x, link->hop.out) != prev) fail_route();
    if (link->hop.in == 0) {
      if (link->prev) fail_route();
      return x;
    }
    prev = x;
    x = hop_target(x, link->hop.in);
  }
  fail(ErrorCode::kInternal, "route history does not reach an origin");
}

struct FirstArrival {
  Round round;
  Id id;
  Round wake;
};

}  // namespace

DecoupledRun run_decoupled(const PortGraph& g, const Schedule& s,
                           const AsyncAlgorithm& algo, Id id_bound,
                           const DecoupledOptions& options) {
  if (s.node_count() != g.node_count())
    fail(ErrorCode::kContract, "schedule does not match the graph");
  if (!known_symmetric(g, options.symmetry_node_limit))
    fail(ErrorCode::kContract, "the decoupled adapter needs a symmetric network");
  validate_ids(g.ids(), id_bound);

  const std::size_t n = g.node_count();
  DecoupledRun run;
  run.radius = algo.radius(id_bound);
  run.labels.assign(n, std::nullopt);
  run.visible_counts.assign(n, 0);
  run.origins_received.assign(n, 0);
  run.far_origins_received.assign(n, 0);

  const std::uint64_t t = run.radius;
  std::optional<Round> horizon;
  for (NodeIndex v = 0; v < n; ++v)
    if (s.awake(v)) horizon = std::max(horizon.value_or(0), *s.wake(v) + t);
  if (!horizon) return run;

  std::vector<std::vector<std::uint32_t>> dist(n);
  for (NodeIndex v = 0; v < n; ++v) dist[v] = g.distances_from(v);

  NetworkState state(g);
  for (Round now = 0;; ++now) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (s.wake(v) != now) continue;
      state.status[v] = ProcessStatus::kAwake;
      state.q_out[v].push_back({g.id(v), now});
      if (s.fate(v) == Fate::kCrashBeforeOutput)
        state.status[v] = ProcessStatus::kCrashed;
    }

    for (NodeIndex v = 0; v < n; ++v) {
      if (!s.awake(v) || *s.wake(v) + t != now) continue;
      if (state.status[v] != ProcessStatus::kAwake) continue;

      // Dedup by origin id, keeping each origin's earliest copy.
      std::map<Id, const Delivery*> earliest;
      for (const Delivery& d : state.q_in[v]) {
        auto [it, fresh] = earliest.try_emplace(d.message.origin_id, &d);
        if (!fresh && d.round < it->second->round) it->second = &d;
      }
      std::map<NodeIndex, FirstArrival> first;
      for (const auto& [id, d] : earliest) {
        const NodeIndex origin = locate_origin(g, v, *d);
        if (g.id(origin) != id)
          fail(ErrorCode::kInternal, "announcement located at the wrong node");
        first.emplace(origin, FirstArrival{d->round, id, d->message.origin_wake});
      }

      SnapshotView view;
      view.observer = v;
      view.taken_at = *s.wake(v);
      view.radius = t;
      view.structure = ball(g, v, t);
      view.visible.resize(view.structure.size());
      view.visible[view.structure.center_local()] = VisibleInfo{g.id(v), now - t};
      for (const auto& [origin, arrival] : first) {
        if (origin == v) continue;
        if (arrival.round != arrival.wake + dist[v][origin])
          fail(ErrorCode::kInternal,
               "announcement of node " + std::to_string(origin) +
                   " first reached node " + std::to_string(v) + " at round " +
                   std::to_string(arrival.round) + ", expected " +
                   std::to_string(arrival.wake + dist[v][origin]));
        ++run.origins_received[v];
        auto local = view.structure.local_index(origin);
        if (!local) {
          ++run.far_origins_received[v];
          continue;
        }
        view.visible[*local] = VisibleInfo{arrival.id, arrival.wake};
      }
      run.visible_counts[v] = view.visible_count();
      run.labels[v] = algo.rule(view);
      state.status[v] = ProcessStatus::kOutputProduced;
    }

    if (now >= *horizon) break;
    flood_round(state, options.trace);
  }
  run.deliveries = state.deliveries;
  run.rounds = state.round;
  return run;
}

}  // namespace alsim
