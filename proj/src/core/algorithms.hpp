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

// Reference algorithms: Cole-Vishkin 3-coloring of oriented rings, a
// universal full-information solver for any LCL, and small fixtures.

#include <cstdint>

#include "core/async_engine.hpp"
#include "core/lcl.hpp"
#include "core/local_engine.hpp"

namespace alsim {

// One color-reduction step: with i the lowest bit where `own` and
// `successor` differ and b = bit i of `own`, returns 2i + b.
std::uint64_t cv_step(std::uint64_t own, std::uint64_t successor);

// Number of cv_step rounds needed to bring colors below `id_bound` down to at
// most 6 colors, iterating m -> 2 * ceil(log2 m).
std::uint64_t cv_reduction_steps(Id id_bound);

// Oriented rings only (port 1 = successor). Runs cv_reduction_steps rounds of
// cv_step, then three rounds that recolor 5, 4 and 3 into {0, 1, 2}. Outputs
// labels 1..3.
LocalAlgorithm cv3();

// Collects the whole graph (t(B) = B), computes the lexicographically-first
// valid labeling with nodes ordered by identifier, outputs the center's label.
// Throws kUnsolvable when no valid labeling exists.
LocalAlgorithm universal(LclTask task);

// Zero rounds, always `label`. Negative-control fixture.
LocalAlgorithm constant(Label label);

// Asynchronous probe whose output hashes everything visible in the snapshot
// (distance, id and wake time of each visible member, plus the ball size).
// Any difference between two engines' snapshots shows up as different labels.
AsyncAlgorithm view_digest(std::uint64_t radius);

}  // namespace alsim
