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

#include "core/lcl.hpp"

#include <algorithm>

#include "core/graph.hpp"

namespace alsim {

bool LclTask::in_alphabet(Label l) const {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

LclTask proper_coloring(Label colors) {
  require(colors >= 1, ErrorCode::kInvalidArgument,
          "coloring needs at least one color");
  LclTask task;
  task.name = "coloring:" + std::to_string(colors);
  task.radius = 1;
  for (Label c = 1; c <= colors; ++c) task.labels.push_back(c);
  task.predicate = [](const Ball& b, std::span<const Label> labels) {
    const auto& center = b.member(b.center_local());
    const Label own = labels[b.center_local()];
    return std::none_of(center.arcs.begin(), center.arcs.end(),
                        [&](const BallArc& a) { return labels[a.local] == own; });
  };
  task.may_extend = [colors](const Ball& b,
                             std::span<const std::optional<Label>> labels) {
    const auto& center = b.member(b.center_local());
    const auto& own = labels[b.center_local()];
    if (own)
      return std::none_of(center.arcs.begin(), center.arcs.end(),
                          [&](const BallArc& a) { return labels[a.local] == own; });
    // an unlabeled center needs a color its labeled neighbors left free
    std::vector<bool> used(static_cast<std::size_t>(colors) + 1, false);
    Label free = colors;
    for (const BallArc& a : center.arcs) {
      const auto& l = labels[a.local];
      if (l && *l >= 1 && *l <= colors && !used[*l]) {
        used[*l] = true;
        --free;
      }
    }
    return free > 0;
  };
  return task;
}

LclTask maximal_independent_set() {
  LclTask task;
  task.name = "mis";
  task.radius = 1;
  task.labels = {0, 1};
  task.predicate = [](const Ball& b, std::span<const Label> labels) {
    const auto& center = b.member(b.center_local());
    auto in_set = [&](const BallArc& a) { return labels[a.local] == 1; };
    if (labels[b.center_local()] == 1)
      return std::none_of(center.arcs.begin(), center.arcs.end(), in_set);
    return std::any_of(center.arcs.begin(), center.arcs.end(), in_set);
  };
  task.may_extend = [](const Ball& b,
                       std::span<const std::optional<Label>> labels) {
    const auto& center = b.member(b.center_local());
    const auto& own = labels[b.center_local()];
    if (!own) return true;  // 1 works if no neighbor is 1, else 0 works
    if (*own == 1)
      return std::none_of(center.arcs.begin(), center.arcs.end(),
                          [&](const BallArc& a) { return labels[a.local] == 1; });
    return std::any_of(center.arcs.begin(), center.arcs.end(),
                       [&](const BallArc& a) { return labels[a.local] != 0; });
  };
  return task;
}

bool check_ball(const LclTask& task, const Ball& b,
                std::span<const std::optional<Label>> labels) {
  if (b.radius() != task.radius)
    fail(ErrorCode::kContract, "ball radius does not match the task radius");
  if (labels.size() != b.size())
    fail(ErrorCode::kContract, "label table does not match the ball");
  std::vector<Label> full;
  full.reserve(labels.size());
  for (const auto& l : labels) {
    if (!l) fail(ErrorCode::kContract, "ball member without a label");
    if (!task.in_alphabet(*l)) return false;
    full.push_back(*l);
  }
  return task.predicate(b, full);
}

namespace {

// Odometer over alphabet assignments to the free slots.
bool extendable(const LclTask& task, const Ball& b,
                std::vector<std::optional<Label>> labels) {
  std::vector<std::uint32_t> free;
  for (std::uint32_t i = 0; i < labels.size(); ++i)
    if (!labels[i]) free.push_back(i);
  for (const auto& l : labels)
    if (l && !task.in_alphabet(*l)) return false;
  if (free.empty()) return check_ball(task, b, labels);
  if (task.labels.empty()) return false;

  std::vector<std::size_t> digit(free.size(), 0);
  for (std::size_t k = 0; k < free.size(); ++k) labels[free[k]] = task.labels[0];
  while (true) {
    if (check_ball(task, b, labels)) return true;
    std::size_t k = 0;
    while (k < free.size() && ++digit[k] == task.labels.size()) {
      digit[k] = 0;
      labels[free[k]] = task.labels[0];
      ++k;
    }
    if (k == free.size()) return false;
    labels[free[k]] = task.labels[digit[k]];
  }
}

}  // namespace

CheckResult check_partial(const LclTask& task, const PortGraph& g,
                          const PartialLabeling& labeling,
                          std::size_t free_slot_limit) {
  if (labeling.size() != g.node_count())
    fail(ErrorCode::kContract, "labeling does not cover every node");
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    Ball b = ball(g, v, task.radius);
    std::vector<std::optional<Label>> labels;
    labels.reserve(b.size());
    std::size_t free = 0;
    for (const auto& m : b.members()) {
      labels.push_back(labeling[m.node]);
      if (!labeling[m.node]) ++free;
    }
    if (free > free_slot_limit)
      fail(ErrorCode::kSizeLimit,
           "ball at node " + std::to_string(v) + " has " +
               std::to_string(free) + " unlabeled members, above the limit of " +
               std::to_string(free_slot_limit));
    if (!extendable(task, b, std::move(labels))) return {false, v};
  }
  return {};
}

}  // namespace alsim
