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

// Port-numbered graphs and radius-t balls.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace alsim {

class Rng;

// One endpoint's view of an edge: leaving through `port`, arriving at
// `target` through `remote_port`.
struct Arc {
  Port port;
  NodeIndex target;
  Port remote_port;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  NodeIndex u;
  Port port_u;
  NodeIndex v;
  Port port_v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Which constructor built the graph. Rings and tori built by the library carry
// a consistent orientation and are known to be symmetric.
enum class Family { kGeneral, kRing, kTorus };

class PortGraph {
 public:
  // Validates simplicity, connectivity, port ranges and identifiers.
  static PortGraph from_edges(std::vector<Id> ids, Id id_bound,
                              std::span<const Edge> edges,
                              Family family = Family::kGeneral);

  std::size_t node_count() const { return adjacency_.size(); }
  Id id_bound() const { return id_bound_; }
  Id id(NodeIndex v) const { return ids_[v]; }
  std::span<const Id> ids() const { return ids_; }
  Family family() const { return family_; }

  // Sorted by port; arcs(v)[p - 1].port == p.
  std::span<const Arc> arcs(NodeIndex v) const { return adjacency_[v]; }
  std::size_t degree(NodeIndex v) const { return adjacency_[v].size(); }
  std::optional<NodeIndex> neighbor(NodeIndex v, Port p) const;

  // Each undirected edge once, with u < v.
  std::vector<Edge> edges() const;

  std::optional<NodeIndex> node_with_id(Id id) const;

  // Same topology, new identifiers.
  PortGraph with_ids(std::vector<Id> ids, Id id_bound) const;

  // Hop distances from `source` over the whole graph.
  std::vector<std::uint32_t> distances_from(NodeIndex source) const;

  friend bool operator==(const PortGraph&, const PortGraph&) = default;

 private:
  PortGraph() = default;

  std::vector<Id> ids_;
  Id id_bound_ = 0;
  std::vector<std::vector<Arc>> adjacency_;
  Family family_ = Family::kGeneral;
};

void validate_ids(std::span<const Id> ids, Id id_bound);

// Oriented ring: port 1 leads clockwise (i -> i+1), port 2 counterclockwise.
PortGraph make_ring(std::vector<Id> ids, Id id_bound);

// Oriented torus, row-major node layout. Ports 1..4 are east, west, south,
// north; every row and column has length at least 3.
PortGraph make_torus(std::size_t rows, std::size_t cols, std::vector<Id> ids,
                     Id id_bound);

// Path 0 - 1 - ... - (n-1); interior nodes use port 1 toward the higher index.
PortGraph make_path(std::vector<Id> ids, Id id_bound);

// Random spanning tree plus each remaining pair independently with
// probability `extra_edge_p`; ports are shuffled per node and identifiers are
// distinct draws from [0, id_bound).
PortGraph make_random_connected(std::size_t n, Id id_bound, double extra_edge_p,
                                Rng& rng);

// Distinct identifiers drawn uniformly from [0, id_bound).
std::vector<Id> random_ids(std::size_t n, Id id_bound, Rng& rng);

std::vector<Id> iota_ids(std::size_t n);

// 2-regular, connected, and every port-1 arc lands on port 2.
bool is_oriented_ring(const PortGraph& g);

// True iff every node can be mapped onto every other by a port-preserving
// automorphism. Refuses graphs above `node_limit` nodes.
bool is_symmetric(const PortGraph& g, std::size_t node_limit = 12);

// Known-symmetric constructor output, or a small graph that passes the search.
bool known_symmetric(const PortGraph& g, std::size_t node_limit = 12);

// An arc of a ball member, restricted to the ball: `local` indexes the
// target in Ball::members().
struct BallArc {
  Port port;
  std::uint32_t local;
  Port remote_port;

  friend bool operator==(const BallArc&, const BallArc&) = default;
};

struct BallMember {
  NodeIndex node;
  std::uint32_t dist;    // hop distance from the center in the host graph
  std::uint32_t degree;  // degree in the host graph
  std::vector<BallArc> arcs;  // induced arcs, sorted by port

  friend bool operator==(const BallMember&, const BallMember&) = default;
};

// B(v, t) with its induced edges and both port numbers of every edge.
// Members are stored in ascending node order, so two balls over the same node
// set compare equal regardless of how they were extracted.
class Ball {
 public:
  NodeIndex center() const { return center_; }
  std::uint64_t radius() const { return radius_; }
  std::span<const BallMember> members() const& { return members_; }
  std::span<const BallMember> members() const&& = delete;
  std::size_t size() const { return members_.size(); }
  const BallMember& member(std::uint32_t local) const { return members_[local]; }

  std::optional<std::uint32_t> local_index(NodeIndex node) const;
  bool contains(NodeIndex node) const { return local_index(node).has_value(); }
  std::uint32_t center_local() const { return *local_index(center_); }

  // True when every member's host-graph arcs all stay inside the ball.
  bool saturated() const;

  // B(c, r) extracted from this ball by a BFS over induced arcs. Distances
  // are measured inside the ball; they match the host graph whenever
  // dist(center, c) + r <= radius().
  Ball sub_ball(NodeIndex c, std::uint64_t r) const;

  friend bool operator==(const Ball&, const Ball&) = default;

 private:
  friend Ball ball(const PortGraph& g, NodeIndex v, std::uint64_t t);
  friend class BallBuilder;

  NodeIndex center_ = 0;
  std::uint64_t radius_ = 0;
  std::vector<BallMember> members_;
};

Ball ball(const PortGraph& g, NodeIndex v, std::uint64_t t);

// Breadth-first enumeration from the center, expanding arcs in increasing
// port order. Depends only on structure and ports.
std::vector<NodeIndex> bfs_order(const Ball& b);

}  // namespace alsim
