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

// Locally checkable labelings and the crash-tolerant correctness checker.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace alsim {

class Ball;
class PortGraph;

// Per-node output; nullopt is an unlabeled (crashed or never-woken) node.
using PartialLabeling = std::vector<std::optional<Label>>;

struct LclTask {
  std::string name;
  std::uint64_t radius = 0;
  std::vector<Label> labels;  // ordered alphabet
  // Over a centered ball whose members are all labeled; `labels` is parallel
  // to Ball::members(). Must ignore identifiers.
  std::function<bool(const Ball&, std::span<const Label>)> predicate;
  // Optional pruning hint over a partially labeled ball: may return false
  // only if no labeling of the missing members satisfies the predicate.
  std::function<bool(const Ball&, std::span<const std::optional<Label>>)>
      may_extend;

  bool in_alphabet(Label l) const;
};

// Radius 1, labels 1..c, center differs from every neighbor.
LclTask proper_coloring(Label colors);

// Radius 1, labels {0, 1} with 1 meaning "in the set".
LclTask maximal_independent_set();

// `labels` parallel to b.members(); every entry must be present and the ball
// radius must equal the task radius. Labels outside the alphabet fail.
bool check_ball(const LclTask& task, const Ball& b,
                std::span<const std::optional<Label>> labels);

struct CheckResult {
  bool ok = true;
  std::optional<NodeIndex> witness;  // first failing center

  explicit operator bool() const { return ok; }
};

inline constexpr std::size_t kDefaultFreeSlotLimit = 20;

// Passes iff for every center v the unlabeled members of B(v, r) can be
// labeled so that the ball is valid. Each ball is extended independently.
CheckResult check_partial(const LclTask& task, const PortGraph& g,
                          const PartialLabeling& labeling,
                          std::size_t free_slot_limit = kDefaultFreeSlotLimit);

}  // namespace alsim
