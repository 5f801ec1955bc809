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

#include <set>

#include "core/rng.hpp"
#include "doctest.h"
#include "support/expect.hpp"
#include "support/oracles.hpp"

using namespace alsim;
using alsim::testing::code_of;

namespace {

std::set<NodeIndex> members_of(const Ball& b) {
  std::set<NodeIndex> out;
  for (const auto& m : b.members()) out.insert(m.node);
  return out;
}


}  // namespace

TEST_CASE("make_ring orients port 1 clockwise") {
  PortGraph g = make_ring({0, 1, 2}, 3);
  CHECK(g.node_count() == 3);
  for (NodeIndex v = 0; v < 3; ++v) {
    CHECK(*g.neighbor(v, 1) == (v + 1) % 3);
    CHECK(*g.neighbor(v, 2) == (v + 2) % 3);
    CHECK(g.arcs(v)[0].remote_port == 2);
  }
  CHECK(is_oriented_ring(g));
}

TEST_CASE("make_ring rejects degenerate input") {
  CHECK(code_of([] { make_ring({0, 1}, 2); }) == ErrorCode::kInvalidTopology);
  CHECK(code_of([] { make_ring({0, 1, 1}, 3); }) == ErrorCode::kInvalidIds);
  CHECK(code_of([] { make_ring({0, 1, 5}, 5); }) == ErrorCode::kInvalidIds);
}

TEST_CASE("from_edges enforces the port-graph invariants") {
  std::vector<Id> ids{0, 1, 2};
  SUBCASE("ports must be exactly 1..deg") {
    std::vector<Edge> e{{0, 1, 1, 1}, {1, 3, 2, 1}};
    CHECK(code_of([&] { PortGraph::from_edges(ids, 3, e); }) == ErrorCode::kInvalidTopology);
  }
  SUBCASE("disconnected") {
    std::vector<Edge> e{{0, 1, 1, 1}};
    CHECK(code_of([&] { PortGraph::from_edges(ids, 3, e); }) == ErrorCode::kInvalidTopology);
  }
  SUBCASE("parallel edges and loops") {
    std::vector<Edge> par{{0, 1, 1, 1}, {1, 2, 0, 2}, {1, 3, 2, 1}};
    CHECK(code_of([&] { PortGraph::from_edges(ids, 3, par); }) == ErrorCode::kInvalidTopology);
    std::vector<Edge> loop{{0, 1, 0, 2}};
    CHECK(code_of([&] { PortGraph::from_edges({0}, 1, loop); }) == ErrorCode::kInvalidTopology);
  }
  SUBCASE("endpoints may disagree on port numbers") {
    std::vector<Edge> e{{0, 1, 1, 2}, {1, 1, 2, 1}};
    PortGraph g = PortGraph::from_edges(ids, 3, e);
    CHECK(g.arcs(1)[1].target == 0);
    CHECK(g.arcs(1)[1].remote_port == 1);
  }
}

TEST_CASE("ball membership and distances") {
  PortGraph c6 = make_ring(iota_ids(6), 6);
  CHECK(members_of(ball(c6, 2, 0)) == std::set<NodeIndex>{2});
  Ball b = ball(c6, 0, 2);
  CHECK(members_of(b) == std::set<NodeIndex>{4, 5, 0, 1, 2});
  CHECK(b.member(*b.local_index(4)).dist == 2);
  CHECK(b.member(*b.local_index(1)).dist == 1);
  CHECK(members_of(ball(c6, 3, 3)).size() == 6);
  CHECK(ball(c6, 3, 3).saturated());
  CHECK_FALSE(ball(c6, 3, 1).saturated());
}

TEST_CASE("ball properties on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    PortGraph g = make_random_connected(2 + rng.uniform(0, 10), 16, 0.25, rng);
    auto d = oracle::floyd(g);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      for (std::uint64_t t = 0; t <= 4; ++t) {
        Ball b = ball(g, v, t);
        CHECK(members_of(b) == oracle::ball_members(g, v, t));
        CHECK(b.member(b.center_local()).dist == 0);
        for (const auto& m : b.members()) CHECK(m.dist == d[v][m.node]);
        auto inner = members_of(b), outer = members_of(ball(g, v, t + 1));
        CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
        // induced edges carry both ports
        for (const auto& m : b.members())
          for (const BallArc& a : m.arcs) {
            const Arc& host = g.arcs(m.node)[a.port - 1];
            CHECK(host.target == b.member(a.local).node);
            CHECK(host.remote_port == a.remote_port);
          }
      }
    }
  }
}

TEST_CASE("sub_ball inside a larger ball matches the host graph") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    PortGraph g = make_random_connected(3 + rng.uniform(0, 9), 12, 0.2, rng);
    const std::uint64_t tau = 1 + rng.uniform(0, 1);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      Ball big = ball(g, v, 3 * tau);
      for (const auto& m : big.members()) {
        if (m.dist > 2 * tau) continue;
        CHECK(big.sub_ball(m.node, tau) == ball(g, m.node, tau));
      }
    }
  }
}

TEST_CASE("bfs_order follows ports and ignores identifiers") {
  PortGraph g = make_ring({7, 3, 9, 1}, 10);
  CHECK(bfs_order(ball(g, 2, 0)) == std::vector<NodeIndex>{2});
  CHECK(bfs_order(ball(g, 0, 1)) == std::vector<NodeIndex>{0, 1, 3});
  PortGraph relabeled = g.with_ids({0, 1, 2, 3}, 4);
  CHECK(bfs_order(ball(g, 0, 2)) == bfs_order(ball(relabeled, 0, 2)));

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PortGraph r = make_random_connected(1 + rng.uniform(0, 11), 12, 0.3, rng);
    for (NodeIndex v = 0; v < r.node_count(); ++v) {
      auto order = bfs_order(ball(r, v, 2));
      CHECK(order == bfs_order(ball(r, v, 2)));
      CHECK(order.front() == v);
      CHECK(std::set<NodeIndex>(order.begin(), order.end()).size() == order.size());
      CHECK(order.size() == ball(r, v, 2).size());
    }
  }
}

TEST_CASE("is_symmetric agrees with permutation search") {
  CHECK(is_symmetric(make_ring({7, 3, 9, 1}, 10)));
  CHECK(is_symmetric(make_ring(iota_ids(5), 5)));
  CHECK_FALSE(is_symmetric(make_path(iota_ids(3), 3)));
  CHECK(is_symmetric(make_torus(3, 3, iota_ids(9), 9)));
  for (std::size_t n = 3; n <= 12; ++n) CHECK(is_symmetric(make_ring(iota_ids(n), n)));

  for (std::size_t n = 3; n <= 7; ++n)
    CHECK(oracle::symmetric_by_permutations(make_ring(iota_ids(n), n)));
  CHECK_FALSE(oracle::symmetric_by_permutations(make_path(iota_ids(3), 3)));

  // an unoriented ring: same cycle, one edge with ports swapped
  std::vector<Edge> e{{0, 1, 1, 2}, {1, 1, 2, 2}, {2, 1, 3, 2}, {3, 2, 0, 1}};
  std::vector<Edge> bent{{0, 1, 1, 2}, {1, 1, 2, 2}, {2, 1, 3, 1}, {3, 2, 0, 2}};
  PortGraph bent_ring = PortGraph::from_edges(iota_ids(4), 4, bent);
  CHECK(is_symmetric(bent_ring) == oracle::symmetric_by_permutations(bent_ring));

  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    PortGraph g = make_random_connected(1 + rng.uniform(0, 6), 7, 0.4, rng);
    CHECK(is_symmetric(g) == oracle::symmetric_by_permutations(g));
  }
}

TEST_CASE("is_symmetric refuses large graphs") {
  CHECK(code_of([] { is_symmetric(make_ring(iota_ids(13), 13)); }) == ErrorCode::kSizeLimit);
  CHECK(is_symmetric(make_ring(iota_ids(13), 13), 13));
  CHECK(known_symmetric(make_ring(iota_ids(200), 200)));
}

TEST_CASE("torus ports are east, west, south, north") {
  PortGraph t = make_torus(3, 4, iota_ids(12), 12);
  CHECK(*t.neighbor(0, 1) == 1);
  CHECK(*t.neighbor(0, 2) == 3);
  CHECK(*t.neighbor(0, 3) == 4);
  CHECK(*t.neighbor(0, 4) == 8);
  CHECK(code_of([] { make_torus(2, 3, iota_ids(6), 6); }) == ErrorCode::kInvalidTopology);
}
