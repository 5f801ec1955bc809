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

// Brute-force reference computations for tests. Nothing here calls the code
// paths it is used to check: distances come from Floyd-Warshall, symmetry from
// permutation search, snapshot sets from the raw definition.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "core/graph.hpp"
#include "core/schedule.hpp"

namespace alsim::oracle {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

inline std::vector<std::vector<std::uint32_t>> floyd(const PortGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (NodeIndex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (const Arc& a : g.arcs(v)) d[v][a.target] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool is_port_automorphism(const PortGraph& g, const std::vector<NodeIndex>& phi) {
  for (NodeIndex x = 0; x < g.node_count(); ++x) {
    if (g.degree(x) != g.degree(phi[x])) return false;
    for (const Arc& a : g.arcs(x)) {
      const Arc& b = g.arcs(phi[x])[a.port - 1];
      if (b.target != phi[a.target] || b.remote_port != a.remote_port) return false;
    }
  }
  return true;
}

// Every ordered pair, every permutation. Use for n <= 8.
inline bool symmetric_by_permutations(const PortGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeIndex> phi(n);
  std::iota(phi.begin(), phi.end(), NodeIndex{0});
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  do {
    if (!is_port_automorphism(g, phi)) continue;
    for (NodeIndex v = 0; v < n; ++v) reach[v][phi[v]] = true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  for (const auto& row : reach)
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  return true;
}

inline std::set<NodeIndex> ball_members(const PortGraph& g, NodeIndex v, std::uint64_t t) {
  auto d = floyd(g);
  std::set<NodeIndex> out;
  for (NodeIndex w = 0; w < g.node_count(); ++w)
    if (d[v][w] <= t) out.insert(w);
  return out;
}

// S_v(rho, theta) straight from its definition.
inline std::set<NodeIndex> snapshot_set(const std::vector<std::vector<std::uint32_t>>& d,
                                        const Schedule& s, NodeIndex v,
                                        std::uint64_t rho, Round theta) {
  std::set<NodeIndex> out;
  for (NodeIndex w = 0; w < s.node_count(); ++w) {
    if (d[v][w] > rho || !s.wake(w)) continue;
    if (*s.wake(w) + d[v][w] <= rho + theta) out.insert(w);
  }
  return out;
}

inline bool proper_coloring_ok(const PortGraph& g, const std::vector<Label>& labels,
                               Label colors) {
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (labels[v] < 1 || labels[v] > colors) return false;
    for (const Arc& a : g.arcs(v))
      if (labels[a.target] == labels[v]) return false;
  }
  return true;
}

// Lexicographically-first proper coloring, nodes ranked by id, by plain
// enumeration of all colors^n labelings. Use for tiny graphs.
inline std::optional<std::vector<Label>> lex_first_coloring(const PortGraph& g,
                                                            Label colors) {
  const std::size_t n = g.node_count();
  std::vector<NodeIndex> rank(n);
  std::iota(rank.begin(), rank.end(), NodeIndex{0});
  std::sort(rank.begin(), rank.end(),
            [&](NodeIndex a, NodeIndex b) { return g.id(a) < g.id(b); });
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(colors);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Label> labels(n);
    std::uint64_t c = code;
    // most significant digit belongs to the smallest id
    for (std::size_t i = n; i-- > 0;) {
      labels[rank[i]] = static_cast<Label>(c % colors) + 1;
      c /= colors;
    }
    if (proper_coloring_ok(g, labels, colors)) return labels;
  }
  return std::nullopt;
}

inline std::uint64_t cv_step(std::uint64_t own, std::uint64_t succ) {
  for (std::uint64_t i = 0; i < 64; ++i) {
    const std::uint64_t a = (own >> i) & 1, b = (succ >> i) & 1;
    if (a != b) return 2 * i + a;
  }
  return ~std::uint64_t{0};
}

}  // namespace alsim::oracle
