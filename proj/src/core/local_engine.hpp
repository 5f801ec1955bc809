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

// Synchronous LOCAL execution in collected-ball normal form: a t-round
// algorithm is a function of each node's radius-t ball.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace alsim {

class Ball;
class PortGraph;

struct LocalAlgorithm {
  std::string name;
  // id bound -> number of rounds t
  std::function<std::uint64_t(Id)> round_bound;
  // (ball of radius t, ids parallel to ball members, id bound) -> label
  std::function<Label(const Ball&, std::span<const Id>, Id)> rule;
};

// Identifiers of the ball's members, in member order.
std::vector<Id> ball_ids(const Ball& b, std::span<const Id> ids);

// output(v) = rule(ball(g, v, t(id_bound)), ids, id_bound) for every v.
std::vector<Label> run_local(const PortGraph& g, const LocalAlgorithm& algo,
                             Id id_bound, std::span<const Id> ids);

}  // namespace alsim
