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

#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "core/rng.hpp"

namespace alsim {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

}  // namespace

void validate_ids(std::span<const Id> ids, Id id_bound) {
  if (id_bound < ids.size())
    fail(ErrorCode::kInvalidIds, "id bound " + std::to_string(id_bound) +
                                     " is smaller than the node count " +
                                     std::to_string(ids.size()));
  std::unordered_set<Id> seen;
  for (Id id : ids) {
    if (id >= id_bound)
      fail(ErrorCode::kInvalidIds, "identifier " + std::to_string(id) +
                                       " is not below the id bound " +
                                       std::to_string(id_bound));
    if (!seen.insert(id).second)
      fail(ErrorCode::kInvalidIds,
           "duplicate identifier " + std::to_string(id));
  }
}

PortGraph PortGraph::from_edges(std::vector<Id> ids, Id id_bound,
                                std::span<const Edge> edges, Family family) {
  const std::size_t n = ids.size();
  if (n == 0) fail(ErrorCode::kInvalidTopology, "graph has no nodes");
  validate_ids(ids, id_bound);

  PortGraph g;
  g.ids_ = std::move(ids);
  g.id_bound_ = id_bound;
  g.family_ = family;
  g.adjacency_.assign(n, {});

  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      fail(ErrorCode::kInvalidTopology, "edge endpoint out of range");
    if (e.u == e.v) fail(ErrorCode::kInvalidTopology, "self-loop");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second)
      fail(ErrorCode::kInvalidTopology, "parallel edge");
    g.adjacency_[e.u].push_back({e.port_u, e.v, e.port_v});
    g.adjacency_[e.v].push_back({e.port_v, e.u, e.port_u});
  }

  for (NodeIndex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Arc& a, const Arc& b) { return a.port < b.port; });
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i].port != i + 1)
        fail(ErrorCode::kInvalidTopology,
             "ports at node " + std::to_string(v) +
                 " are not exactly 1..degree");
    }
  }

  auto dist = g.distances_from(0);
  if (std::any_of(dist.begin(), dist.end(),
                  [](std::uint32_t d) { return d == kUnreached; }))
    fail(ErrorCode::kInvalidTopology, "graph is not connected");
  return g;
}

std::optional<NodeIndex> PortGraph::neighbor(NodeIndex v, Port p) const {
  const auto& adj = adjacency_[v];
  if (p == 0 || p > adj.size()) return std::nullopt;
  return adj[p - 1].target;
}

std::vector<Edge> PortGraph::edges() const {
  std::vector<Edge> out;
  for (NodeIndex v = 0; v < adjacency_.size(); ++v)
    for (const Arc& a : adjacency_[v])
      if (v < a.target) out.push_back({v, a.port, a.target, a.remote_port});
  return out;
}

std::optional<NodeIndex> PortGraph::node_with_id(Id id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

PortGraph PortGraph::with_ids(std::vector<Id> ids, Id id_bound) const {
  if (ids.size() != node_count())
    fail(ErrorCode::kInvalidIds, "identifier list has the wrong length");
  validate_ids(ids, id_bound);
  PortGraph g = *this;
  g.ids_ = std::move(ids);
  g.id_bound_ = id_bound;
  return g;
}

std::vector<std::uint32_t> PortGraph::distances_from(NodeIndex source) const {
  std::vector<std::uint32_t> dist(node_count(), kUnreached);
  std::deque<NodeIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeIndex x = queue.front();
    queue.pop_front();
    for (const Arc& a : adjacency_[x]) {
      if (dist[a.target] != kUnreached) continue;
      dist[a.target] = dist[x] + 1;
      queue.push_back(a.target);
    }
  }
  return dist;
}

std::vector<Id> iota_ids(std::size_t n) {
  std::vector<Id> ids(n);
  std::iota(ids.begin(), ids.end(), Id{0});
  return ids;
}

PortGraph make_ring(std::vector<Id> ids, Id id_bound) {
  const std::size_t n = ids.size();
  if (n < 3)
    fail(ErrorCode::kInvalidTopology, "a ring needs at least 3 nodes");
  std::vector<Edge> edges;
  for (NodeIndex i = 0; i < n; ++i)
    edges.push_back({i, 1, static_cast<NodeIndex>((i + 1) % n), 2});
  return PortGraph::from_edges(std::move(ids), id_bound, edges, Family::kRing);
}

PortGraph make_torus(std::size_t rows, std::size_t cols, std::vector<Id> ids,
                     Id id_bound) {
  if (rows < 3 || cols < 3)
    fail(ErrorCode::kInvalidTopology,
         "a torus needs at least 3 rows and 3 columns");
  if (ids.size() != rows * cols)
    fail(ErrorCode::kInvalidIds, "identifier list has the wrong length");
  auto at = [cols](std::size_t r, std::size_t c) {
    return static_cast<NodeIndex>(r * cols + c);
  };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      edges.push_back({at(r, c), 1, at(r, (c + 1) % cols), 2});
      edges.push_back({at(r, c), 3, at((r + 1) % rows, c), 4});
    }
  }
  return PortGraph::from_edges(std::move(ids), id_bound, edges,
                               Family::kTorus);
}

PortGraph make_path(std::vector<Id> ids, Id id_bound) {
  const std::size_t n = ids.size();
  std::vector<Edge> edges;
  for (NodeIndex i = 0; i + 1 < n; ++i)
    edges.push_back({i, 1, i + 1, i + 1 == n - 1 ? Port{1} : Port{2}});
  return PortGraph::from_edges(std::move(ids), id_bound, edges);
}

std::vector<Id> random_ids(std::size_t n, Id id_bound, Rng& rng) {
  if (id_bound < n)
    fail(ErrorCode::kInvalidIds, "id bound is smaller than the node count");
  std::vector<Id> out;
  out.reserve(n);
  if (id_bound <= (Id{1} << 20)) {
    std::vector<Id> pool(id_bound);
    std::iota(pool.begin(), pool.end(), Id{0});
    for (std::size_t i = 0; i < n; ++i) {
      auto j = static_cast<std::size_t>(rng.uniform(i, id_bound - 1));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }
  std::unordered_set<Id> used;
  while (out.size() < n) {
    Id id = rng.uniform(0, id_bound - 1);
    if (used.insert(id).second) out.push_back(id);
  }
  return out;
}

PortGraph make_random_connected(std::size_t n, Id id_bound, double extra_edge_p,
                                Rng& rng) {
  if (n == 0) fail(ErrorCode::kInvalidTopology, "graph has no nodes");
  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), NodeIndex{0});
  rng.shuffle(order);

  std::set<std::pair<NodeIndex, NodeIndex>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    NodeIndex a = order[i];
    NodeIndex b = order[rng.uniform(0, i - 1)];
    pairs.insert(std::minmax(a, b));
  }
  for (NodeIndex a = 0; a < n; ++a)
    for (NodeIndex b = a + 1; b < n; ++b)
      if (!pairs.count({a, b}) && rng.bernoulli(extra_edge_p))
        pairs.insert({a, b});

  std::vector<std::vector<NodeIndex>> incident(n);
  for (auto [a, b] : pairs) {
    incident[a].push_back(b);
    incident[b].push_back(a);
  }
  // port_of[a][k]: port at a for its k-th incident neighbor
  std::vector<std::vector<std::pair<NodeIndex, Port>>> port_of(n);
  for (NodeIndex a = 0; a < n; ++a) {
    std::vector<Port> ports(incident[a].size());
    std::iota(ports.begin(), ports.end(), Port{1});
    rng.shuffle(ports);
    for (std::size_t k = 0; k < ports.size(); ++k)
      port_of[a].push_back({incident[a][k], ports[k]});
  }
  auto port_at = [&](NodeIndex a, NodeIndex b) {
    for (auto [nb, p] : port_of[a])
      if (nb == b) return p;
    return Port{0};
  };
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, port_at(a, b), b, port_at(b, a)});
  return PortGraph::from_edges(random_ids(n, id_bound, rng), id_bound, edges);
}

bool is_oriented_ring(const PortGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 3) return false;
  for (NodeIndex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
    if (g.arcs(v)[0].remote_port != 2) return false;
  }
  // connected and 2-regular, so it is a single cycle
  return true;
}

namespace {

// Port-preserving automorphisms of a connected graph are determined by the
// image of one node, so each candidate image is either forced or refuted by
// propagation along ports.
bool extends_to_automorphism(const PortGraph& g, NodeIndex from, NodeIndex to) {
  const std::size_t n = g.node_count();
  constexpr NodeIndex kUnset = std::numeric_limits<NodeIndex>::max();
  std::vector<NodeIndex> image(n, kUnset), preimage(n, kUnset);
  image[from] = to;
  preimage[to] = from;
  std::deque<NodeIndex> queue{from};
  while (!queue.empty()) {
    NodeIndex x = queue.front();
    queue.pop_front();
    NodeIndex fx = image[x];
    if (g.degree(x) != g.degree(fx)) return false;
    auto src = g.arcs(x);
    auto dst = g.arcs(fx);
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (src[k].remote_port != dst[k].remote_port) return false;
      NodeIndex y = src[k].target, fy = dst[k].target;
      if (image[y] == kUnset) {
        if (preimage[fy] != kUnset) return false;
        image[y] = fy;
        preimage[fy] = y;
        queue.push_back(y);
      } else if (image[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_symmetric(const PortGraph& g, std::size_t node_limit) {
  const std::size_t n = g.node_count();
  if (n > node_limit)
    fail(ErrorCode::kSizeLimit, "symmetry search refused: " +
                                    std::to_string(n) + " nodes exceeds limit " +
                                    std::to_string(node_limit));
  // The automorphisms form a group, so reaching every node from node 0
  // covers every ordered pair.
  for (NodeIndex w = 0; w < n; ++w)
    if (!extends_to_automorphism(g, 0, w)) return false;
  return true;
}

bool known_symmetric(const PortGraph& g, std::size_t node_limit) {
  if (g.family() == Family::kRing || g.family() == Family::kTorus) return true;
  if (is_oriented_ring(g)) return true;
  return is_symmetric(g, node_limit);
}

// ---------------------------------------------------------------------------
// Balls

class BallBuilder {
 public:
  // `found` holds (node, dist) pairs; `host_arcs(node)` yields Arc-like
  // entries (port, target node, remote port) in port order.
  template <typename HostArcs, typename HostDegree>
  static Ball build(NodeIndex center, std::uint64_t radius,
                    std::vector<std::pair<NodeIndex, std::uint32_t>> found,
                    HostArcs&& host_arcs, HostDegree&& host_degree) {
    std::sort(found.begin(), found.end());
    Ball b;
    b.center_ = center;
    b.radius_ = radius;
    b.members_.reserve(found.size());
    for (auto [node, dist] : found)
      b.members_.push_back(
          {node, dist, static_cast<std::uint32_t>(host_degree(node)), {}});
    for (auto& m : b.members_) {
      for (const Arc& a : host_arcs(m.node)) {
        auto local = b.local_index(a.target);
        if (local) m.arcs.push_back({a.port, *local, a.remote_port});
      }
    }
    return b;
  }
};

std::optional<std::uint32_t> Ball::local_index(NodeIndex node) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), node,
      [](const BallMember& m, NodeIndex x) { return m.node < x; });
  if (it == members_.end() || it->node != node) return std::nullopt;
  return static_cast<std::uint32_t>(it - members_.begin());
}

bool Ball::saturated() const {
  return std::all_of(members_.begin(), members_.end(), [](const BallMember& m) {
    return m.arcs.size() == m.degree;
  });
}

Ball ball(const PortGraph& g, NodeIndex v, std::uint64_t t) {
  std::vector<std::pair<NodeIndex, std::uint32_t>> found;
  std::vector<std::uint32_t> dist(g.node_count(), kUnreached);
  std::deque<NodeIndex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    NodeIndex x = queue.front();
    queue.pop_front();
    found.push_back({x, dist[x]});
    if (dist[x] >= t) continue;
    for (const Arc& a : g.arcs(x)) {
      if (dist[a.target] != kUnreached) continue;
      dist[a.target] = dist[x] + 1;
      queue.push_back(a.target);
    }
  }
  return BallBuilder::build(
      v, t, std::move(found), [&](NodeIndex x) { return g.arcs(x); },
      [&](NodeIndex x) { return g.degree(x); });
}

Ball Ball::sub_ball(NodeIndex c, std::uint64_t r) const {
  auto start = local_index(c);
  if (!start) fail(ErrorCode::kContract, "sub-ball center is not a member");
  std::vector<std::uint32_t> dist(members_.size(), kUnreached);
  std::vector<std::pair<NodeIndex, std::uint32_t>> found;
  std::deque<std::uint32_t> queue{*start};
  dist[*start] = 0;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    found.push_back({members_[x].node, dist[x]});
    if (dist[x] >= r) continue;
    for (const BallArc& a : members_[x].arcs) {
      if (dist[a.local] != kUnreached) continue;
      dist[a.local] = dist[x] + 1;
      queue.push_back(a.local);
    }
  }
  auto host_arcs = [this](NodeIndex node) {
    const BallMember& m = members_[*local_index(node)];
    std::vector<Arc> arcs;
    arcs.reserve(m.arcs.size());
    for (const BallArc& a : m.arcs)
      arcs.push_back({a.port, members_[a.local].node, a.remote_port});
    return arcs;
  };
  auto host_degree = [this](NodeIndex node) {
    return members_[*local_index(node)].degree;
  };
  return BallBuilder::build(c, r, std::move(found), host_arcs, host_degree);
}

std::vector<NodeIndex> bfs_order(const Ball& b) {
  std::vector<NodeIndex> order;
  order.reserve(b.size());
  std::vector<bool> seen(b.size(), false);
  std::deque<std::uint32_t> queue{b.center_local()};
  seen[b.center_local()] = true;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    order.push_back(b.member(x).node);
    for (const BallArc& a : b.member(x).arcs) {
      if (seen[a.local]) continue;
      seen[a.local] = true;
      queue.push_back(a.local);
    }
  }
  return order;
}

}  // namespace alsim
