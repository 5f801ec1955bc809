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

// The DECOUPLED model: failure-free synchronous routers that flood every
// message, under asynchronous crash-prone processes. Includes the adapter that
// runs an AsyncLocal algorithm on a symmetric network by announcing
// (id, wake) at wake-up and reading the input buffer t rounds later.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "core/async_engine.hpp"

namespace alsim {

// Router hop: entered through `in`, left through `out`. The originating
// router records in = 0.
struct RouteHop {
  Port in;
  Port out;

  friend bool operator==(const RouteHop&, const RouteHop&) = default;
};

// Persistent route list; forwarding a copy shares the prefix.
struct RouteLink {
  RouteHop hop;
  std::shared_ptr<const RouteLink> prev;
  std::size_t length;
};

struct Message {
  Id origin_id = 0;
  Round origin_wake = 0;
  Round emitted_at = 0;
  std::shared_ptr<const RouteLink> route;

  std::size_t hops() const { return route ? route->length : 0; }
  // Oldest hop first.
  std::vector<RouteHop> route_history() const;
};

struct Delivery {
  Message message;
  Round round;       // first round at which the process can read it
  Port arrival_port;
};

enum class ProcessStatus { kAsleep, kAwake, kOutputProduced, kCrashed };

struct NetworkState {
  explicit NetworkState(const PortGraph& g);

  const PortGraph* graph;
  Round round = 0;
  // Arrived at each router at the end of the previous round, to be forwarded
  // this round; paired with the arrival port.
  std::vector<std::vector<std::pair<Message, Port>>> router_in;
  std::vector<std::vector<std::pair<Id, Round>>> q_out;
  std::vector<std::vector<Delivery>> q_in;
  std::vector<ProcessStatus> status;
  std::size_t deliveries = 0;
};

using TraceSink = std::function<void(std::string_view)>;

// One communication round. Routers forward each pending message through
// every port except the one it arrived on, appending (in, out) to its route;
// then each router packages its process's q_out, tags it with the current
// round and sends it through every port. Everything sent in round r is
// readable at round r + 1.
void flood_round(NetworkState& state, const TraceSink& trace = {});

struct DecoupledOptions {
  TraceSink trace;
  std::size_t symmetry_node_limit = 12;
};

struct DecoupledRun {
  PartialLabeling labels;
  std::vector<std::size_t> visible_counts;
  // Distinct origins in each reader's buffer at read time (self excluded).
  std::vector<std::size_t> origins_received;
  // Of those, origins farther than t, which the adapter ignores.
  std::vector<std::size_t> far_origins_received;
  std::size_t deliveries = 0;
  Round rounds = 0;
  std::uint64_t radius = 0;
};

// Requires a symmetric network; processes know its structure a priori and
// learn only (id, wake) pairs. Each announcement's first arrival is checked
// against wake(w) + dist(v, w); a mismatch throws kInternal.
DecoupledRun run_decoupled(const PortGraph& g, const Schedule& s,
                           const AsyncAlgorithm& algo, Id id_bound,
                           const DecoupledOptions& options = {});

}  // namespace alsim
