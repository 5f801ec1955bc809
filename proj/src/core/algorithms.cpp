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

#include "core/algorithms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "core/graph.hpp"

namespace alsim {

std::uint64_t cv_step(std::uint64_t own, std::uint64_t successor) {
  if (own == successor)
    fail(ErrorCode::kContract, "cv_step on equal colors " + std::to_string(own));
  const auto i = static_cast<std::uint64_t>(std::countr_zero(own ^ successor));
  return 2 * i + ((own >> i) & 1);
}

namespace {

// Bits needed to write any value in [0, m).
std::uint64_t bits_for(std::uint64_t m) {
  return m <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(m - 1));
}

constexpr std::uint64_t kCvTargetColors = 6;
constexpr std::array<std::uint64_t, 3> kEliminated = {5, 4, 3};

std::uint32_t step_along(const Ball& b, std::uint32_t local, Port port) {
  const BallMember& m = b.member(local);
  if (m.degree != 2)
    fail(ErrorCode::kContract, "cv3 requires an oriented ring (degree != 2)");
  if (m.arcs.size() < port || m.arcs[port - 1].port != port)
    fail(ErrorCode::kContract, "cv3 ball is too small for its round bound");
  const BallArc& a = m.arcs[port - 1];
  if (a.remote_port != (port == 1 ? 2u : 1u))
    fail(ErrorCode::kContract, "cv3 requires a consistently oriented ring");
  return a.local;
}

}  // namespace

std::uint64_t cv_reduction_steps(Id id_bound) {
  std::uint64_t m = id_bound, k = 0;
  while (m > kCvTargetColors) {
    m = 2 * bits_for(m);
    ++k;
  }
  return k;
}

LocalAlgorithm cv3() {
  LocalAlgorithm algo;
  algo.name = "cv3";
  algo.round_bound = [](Id id_bound) { return cv_reduction_steps(id_bound) + 3; };
  algo.rule = [](const Ball& b, std::span<const Id> ids, Id id_bound) -> Label {
    const std::uint64_t k = cv_reduction_steps(id_bound);
    // window[j] holds the node at ring offset j - 3 from the center
    const std::size_t width = k + 7;
    std::vector<std::uint32_t> window(width);
    window[3] = b.center_local();
    for (std::size_t j = 3; j > 0; --j) window[j - 1] = step_along(b, window[j], 2);
    for (std::size_t j = 3; j + 1 < width; ++j)
      window[j + 1] = step_along(b, window[j], 1);

    std::vector<std::uint64_t> color(width);
    for (std::size_t j = 0; j < width; ++j) {
      if (ids[window[j]] >= id_bound)
        fail(ErrorCode::kContract, "identifier not below the id bound");
      color[j] = ids[window[j]];
    }
    for (std::uint64_t step = 0; step < k; ++step) {
      for (std::size_t j = 0; j + 1 < color.size(); ++j)
        color[j] = cv_step(color[j], color[j + 1]);
      color.pop_back();
    }
    for (std::uint64_t eliminated : kEliminated) {
      std::vector<std::uint64_t> next(color.size() - 2);
      for (std::size_t j = 1; j + 1 < color.size(); ++j) {
        std::uint64_t c = color[j];
        if (c == eliminated) {
          c = 0;
          while (c == color[j - 1] || c == color[j + 1]) ++c;
        }
        next[j - 1] = c;
      }
      color = std::move(next);
    }
    return static_cast<Label>(color[0]) + 1;
  };
  return algo;
}

LocalAlgorithm universal(LclTask task) {
  LocalAlgorithm algo;
  algo.name = "universal:" + task.name;
  algo.round_bound = [](Id id_bound) { return static_cast<std::uint64_t>(id_bound); };
  algo.rule = [task = std::move(task)](const Ball& b, std::span<const Id> ids,
                                       Id) -> Label {
    if (!b.saturated())
      fail(ErrorCode::kContract, "universal rule needs the whole graph in view");
    const std::size_t n = b.size();
    if (task.labels.empty()) fail(ErrorCode::kUnsolvable, "empty alphabet");

    // by_rank[i] = local index of the i-th smallest identifier
    std::vector<std::uint32_t> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0u);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](std::uint32_t x, std::uint32_t y) { return ids[x] < ids[y]; });
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[by_rank[i]] = i;

    // Each task ball is fully checked once its highest-ranked member is set;
    // before that, the task's pruning hint (if any) refutes dead branches.
    struct Check {
      Ball ball;
      std::vector<std::uint32_t> to_host;  // sub-ball member -> host local
      std::size_t last = 0;                // rank completing the ball
    };
    std::vector<Check> checks;
    checks.reserve(n);
    std::vector<std::vector<std::size_t>> touching(n);  // by rank
    for (std::uint32_t c = 0; c < n; ++c) {
      Check chk{b.sub_ball(b.member(c).node, task.radius), {}, 0};
      for (const auto& m : chk.ball.members()) {
        std::uint32_t host = *b.local_index(m.node);
        chk.to_host.push_back(host);
        chk.last = std::max(chk.last, rank[host]);
        touching[rank[host]].push_back(checks.size());
      }
      checks.push_back(std::move(chk));
    }

    std::vector<std::size_t> choice(n, 0);
    std::vector<Label> value(n);
    auto consistent = [&](std::size_t i) {
      for (std::size_t k : touching[i]) {
        const Check& chk = checks[k];
        if (chk.last == i) {
          std::vector<Label> local;
          local.reserve(chk.to_host.size());
          for (std::uint32_t h : chk.to_host) local.push_back(value[h]);
          if (!task.predicate(chk.ball, local)) return false;
        } else if (task.may_extend) {
          std::vector<std::optional<Label>> local;
          local.reserve(chk.to_host.size());
          for (std::uint32_t h : chk.to_host)
            local.push_back(rank[h] <= i ? std::optional<Label>(value[h]) : std::nullopt);
          if (!task.may_extend(chk.ball, local)) return false;
        }
      }
      return true;
    };

    std::size_t i = 0;
    choice[0] = 0;
    while (true) {
      if (choice[i] == task.labels.size()) {
        if (i == 0)
          fail(ErrorCode::kUnsolvable,
               "no valid " + task.name + " labeling exists for this graph");
        choice[i] = 0;
        ++choice[--i];
        continue;
      }
      value[by_rank[i]] = task.labels[choice[i]];
      if (!consistent(i)) {
        ++choice[i];
        continue;
      }
      if (i + 1 == n) break;
      choice[++i] = 0;
    }
    return value[b.center_local()];
  };
  return algo;
}

LocalAlgorithm constant(Label label) {
  LocalAlgorithm algo;
  algo.name = "const:" + std::to_string(label);
  algo.round_bound = [](Id) { return std::uint64_t{0}; };
  algo.rule = [label](const Ball&, std::span<const Id>, Id) { return label; };
  return algo;
}

AsyncAlgorithm view_digest(std::uint64_t radius) {
  AsyncAlgorithm algo;
  algo.name = "digest:" + std::to_string(radius);
  algo.radius = [radius](Id) { return radius; };
  algo.rule = [](const SnapshotView& view) -> Label {
    std::vector<std::tuple<std::uint64_t, Id, Round>> seen;
    for (std::uint32_t i = 0; i < view.structure.size(); ++i)
      if (const auto& info = view.visible[i])
        seen.emplace_back(view.structure.member(i).dist, info->id, info->wake);
    std::sort(seen.begin(), seen.end());
    // FNV-1a over the sorted entries
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t x) {
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (x >> (8 * byte)) & 0xff;
        h *= 0x100000001b3ull;
      }
    };
    mix(view.structure.size());
    for (auto [d, id, wake] : seen) {
      mix(d);
      mix(id);
      mix(wake);
    }
    return static_cast<Label>(h >> 1);
  };
  return algo;
}

}  // namespace alsim
