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

#include <fstream>
#include <sstream>

#include "core/algorithms.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "core/transform.hpp"
#include "support/expect.hpp"

using namespace alsim;
using alsim::testing::code_of;

namespace {

std::vector<std::string> collect(NetworkState& st, int rounds) {
  std::vector<std::string> lines;
  for (int i = 0; i < rounds; ++i)
    flood_round(st, [&](std::string_view l) { lines.emplace_back(l); });
  return lines;
}

}  // namespace

TEST_CASE("an idle network only advances the clock") {
  PortGraph g = make_ring(iota_ids(4), 4);
  NetworkState st(g);
  CHECK(collect(st, 3).empty());
  CHECK(st.round == 3);
  CHECK(st.deliveries == 0);
  for (const auto& q : st.q_in) CHECK(q.empty());
}

TEST_CASE("flooding along a path") {
  PortGraph g = make_path(iota_ids(5), 5);
  NetworkState st(g);
  st.q_out[0].push_back({0, 0});
  for (int k = 1; k <= 4; ++k) {
    flood_round(st);
    for (NodeIndex v = 0; v < 5; ++v) {
      if (v == static_cast<NodeIndex>(k)) {
        REQUIRE(st.q_in[v].size() == 1);
        const Delivery& d = st.q_in[v][0];
        CHECK(d.round == static_cast<Round>(k));
        CHECK(d.message.hops() == static_cast<std::size_t>(k));
        CHECK(d.message.route_history().size() == static_cast<std::size_t>(k));
        CHECK(d.message.route_history().front().in == 0);
        CHECK(d.message.emitted_at == 0);
      } else if (v > static_cast<NodeIndex>(k)) {
        CHECK(st.q_in[v].empty());
      }
    }
  }
  CHECK(st.q_in[0].empty());  // never bounced back along the arrival link
}

TEST_CASE("flooding on C4 never re-sends on the arrival link") {
  PortGraph g = make_ring(iota_ids(4), 4);
  NetworkState st(g);
  st.q_out[0].push_back({0, 0});
  auto lines = collect(st, 4);
  const std::vector<std::string> expected{
      "round=1 edge=0:1->1:2 origin=0 emitted=0 hops=1",
      "round=1 edge=0:2->3:1 origin=0 emitted=0 hops=1",
      "round=2 edge=1:1->2:2 origin=0 emitted=0 hops=2",
      "round=2 edge=3:2->2:1 origin=0 emitted=0 hops=2",
      "round=3 edge=2:1->3:2 origin=0 emitted=0 hops=3",
      "round=3 edge=2:2->1:1 origin=0 emitted=0 hops=3",
      "round=4 edge=3:1->0:2 origin=0 emitted=0 hops=4",
      "round=4 edge=1:2->0:1 origin=0 emitted=0 hops=4",
  };
  std::vector<std::string> a = lines, b = expected;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  REQUIRE(st.q_in[2].size() == 2);
  for (const Delivery& d : st.q_in[2]) {
    CHECK(d.round == 2);
    const auto r = d.message.route_history();
    CHECK(r[1].in != r[1].out);
  }
}

TEST_CASE("golden trace") {
  PortGraph g = make_ring(iota_ids(4), 4);
  Schedule s({Round{0}, Round{2}, kNever, Round{1}},
             {Fate::kCorrect, Fate::kCrashBeforeOutput, Fate::kCorrect, Fate::kCorrect});
  std::ostringstream trace;
  DecoupledOptions opts;
  opts.trace = [&](std::string_view l) { trace << l << '\n'; };
  run_decoupled(g, s, view_digest(1), 4, opts);
  std::ifstream golden(ALSIM_GOLDEN_DIR "/decoupled_ring4.trace");
  REQUIRE(golden);
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(trace.str() == want.str());
}

TEST_CASE("decoupled runs match async ones") {
  Rng rng(61);
  for (std::size_t n = 3; n <= 9; ++n) {
    PortGraph g = make_ring(random_ids(n, 2 * n, rng), 2 * n);
    for (int trial = 0; trial < 20; ++trial) {
      Schedule s = random_schedule(g, {rng.next(), rng.uniform(0, 5), 0.2, 0.2});
      AsyncAlgorithm algo = view_digest(rng.uniform(0, 3));
      auto a = run_async(g, s, algo, 2 * n);
      auto d = run_decoupled(g, s, algo, 2 * n);
      CHECK(a.labels == d.labels);
      // a crashed process never reads its buffer, so only correct ones count
      for (NodeIndex v = 0; v < n; ++v)
        if (s.correct(v)) CHECK(a.visible_counts[v] == d.visible_counts[v]);
    }
  }
  PortGraph torus = make_torus(3, 3, iota_ids(9), 9);
  for (int trial = 0; trial < 10; ++trial) {
    Schedule s = random_schedule(torus, {rng.next(), 4, 0.2, 0.2});
    CHECK(run_async(torus, s, view_digest(2), 9).labels ==
          run_decoupled(torus, s, view_digest(2), 9).labels);
  }
  PortGraph ring = make_ring(iota_ids(4), 4);
  AsyncAlgorithm t = transform(cv3(), 4);
  Schedule s = random_schedule(ring, {3, 2, 0.2, 0.2});
  CHECK(run_async(ring, s, t, 4).labels == run_decoupled(ring, s, t, 4).labels);
}

TEST_CASE("message accounting and far receipts") {
  PortGraph g = make_ring(iota_ids(10), 10);
  // node 0 wakes late; everyone else early
  std::vector<Wake> wakes(10, Round{0});
  wakes[0] = Round{8};
  Schedule s(wakes, std::vector<Fate>(10, Fate::kCorrect));
  auto d = run_decoupled(g, s, view_digest(2), 10);
  auto set = snapshot_set(g, s, 0, 2, 8);
  CHECK(d.origins_received[0] - d.far_origins_received[0] + 1 == set.size());
  CHECK(d.far_origins_received[0] > 0);
  CHECK(d.visible_counts[0] == set.size());

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Schedule r = random_schedule(g, {rng.next(), 6, 0.3, 0.2});
    auto run = run_decoupled(g, r, view_digest(2), 10);
    for (NodeIndex v = 0; v < 10; ++v) {
      if (!r.correct(v)) continue;
      CHECK(run.origins_received[v] - run.far_origins_received[v] + 1 ==
            snapshot_set(g, r, v, 2, *r.wake(v)).size());
    }
  }
}

TEST_CASE("all asleep means silence") {
  PortGraph g = make_ring(iota_ids(5), 5);
  Schedule s(std::vector<Wake>(5, kNever), std::vector<Fate>(5, Fate::kCorrect));
  auto d = run_decoupled(g, s, view_digest(1), 5);
  CHECK(d.deliveries == 0);
  for (const auto& l : d.labels) CHECK_FALSE(l);
}

TEST_CASE("asymmetric graphs are refused") {
  PortGraph p = make_path(iota_ids(4), 4);
  CHECK(code_of([&] { run_decoupled(p, sync_schedule(p), view_digest(1), 4); }) ==
        ErrorCode::kContract);
}
