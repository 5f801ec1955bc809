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

#include "core/schedule.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "core/graph.hpp"
#include "core/rng.hpp"

namespace alsim {

Schedule::Schedule(std::vector<Wake> wake, std::vector<Fate> fate)
    : wake_(std::move(wake)), fate_(std::move(fate)) {
  if (wake_.size() != fate_.size())
    fail(ErrorCode::kInvalidArgument, "wake and fate tables differ in size");
  for (std::size_t v = 0; v < wake_.size(); ++v)
    if (!wake_[v] && fate_[v] == Fate::kCrashBeforeOutput)
      fail(ErrorCode::kInvalidArgument,
           "node " + std::to_string(v) + " crashes but never wakes");
}

std::optional<Round> Schedule::max_wake() const {
  std::optional<Round> best;
  for (const Wake& w : wake_)
    if (w && (!best || *w > *best)) best = *w;
  return best;
}

Schedule sync_schedule(const PortGraph& g) {
  return Schedule(std::vector<Wake>(g.node_count(), Round{0}),
                  std::vector<Fate>(g.node_count(), Fate::kCorrect));
}

Schedule random_schedule(const PortGraph& g,
                         const RandomScheduleParams& params) {
  auto valid = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!valid(params.p_never) || !valid(params.p_crash))
    fail(ErrorCode::kInvalidArgument, "probabilities must lie in [0, 1]");
  Rng rng(params.seed);
  const std::size_t n = g.node_count();
  std::vector<Wake> wake(n);
  std::vector<Fate> fate(n, Fate::kCorrect);
  for (std::size_t v = 0; v < n; ++v) {
    if (rng.bernoulli(params.p_never)) continue;
    wake[v] = rng.uniform(0, params.window);
    if (rng.bernoulli(params.p_crash)) fate[v] = Fate::kCrashBeforeOutput;
  }
  return Schedule(std::move(wake), std::move(fate));
}

std::uint64_t enumeration_limit_from_env() {
  if (const char* raw = std::getenv("ALSIM_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0') return v;
  }
  return kDefaultEnumerationLimit;
}

namespace {

std::uint64_t per_node_choices(EnumerationParams p) {
  return (p.max_wake + 1) * (p.include_crash ? 2 : 1) +
         (p.include_never ? 1 : 0);
}

}  // namespace

std::uint64_t ScheduleSpace::count(std::size_t node_count,
                                   EnumerationParams params) {
  const std::uint64_t c = per_node_choices(params);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < node_count; ++i) {
    if (c != 0 && total > UINT64_MAX / c) return UINT64_MAX;
    total *= c;
  }
  return total;
}

ScheduleSpace::ScheduleSpace(std::size_t node_count, EnumerationParams params,
                             std::uint64_t limit)
    : node_count_(node_count),
      params_(params),
      choices_(per_node_choices(params)),
      size_(count(node_count, params)) {
  if (size_ > limit)
    fail(ErrorCode::kSizeLimit,
         "enumeration would produce " +
             (size_ == UINT64_MAX ? std::string("more than 2^64")
                                  : std::to_string(size_)) +
             " schedules, above the limit of " + std::to_string(limit));
}

Schedule ScheduleSpace::at(std::uint64_t index) const {
  if (index >= size_) fail(ErrorCode::kInvalidArgument, "schedule index out of range");
  const std::uint64_t awake_choices = params_.max_wake + 1;
  std::vector<Wake> wake(node_count_);
  std::vector<Fate> fate(node_count_, Fate::kCorrect);
  for (std::size_t v = 0; v < node_count_; ++v) {
    std::uint64_t k = index % choices_;
    index /= choices_;
    if (k < awake_choices) {
      wake[v] = k;
    } else if (params_.include_crash && k < 2 * awake_choices) {
      wake[v] = k - awake_choices;
      fate[v] = Fate::kCrashBeforeOutput;
    }  // else never
  }
  return Schedule(std::move(wake), std::move(fate));
}

}  // namespace alsim
