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

// Adversarial process schedules: when each process wakes, and whether it
// crashes before producing its output.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace alsim {

class PortGraph;

// Two crash modes exist: a process that never wakes (kNever wake) and one that
// wakes, becomes visible, then stops before outputting.
enum class Fate { kCorrect, kCrashBeforeOutput };

using Wake = std::optional<Round>;  // nullopt: never wakes
inline constexpr Wake kNever = std::nullopt;

class Schedule {
 public:
  Schedule() = default;
  // A crashing process must wake.
  Schedule(std::vector<Wake> wake, std::vector<Fate> fate);

  std::size_t node_count() const { return wake_.size(); }
  Wake wake(NodeIndex v) const { return wake_[v]; }
  Fate fate(NodeIndex v) const { return fate_[v]; }
  bool awake(NodeIndex v) const { return wake_[v].has_value(); }
  bool correct(NodeIndex v) const {
    return awake(v) && fate_[v] == Fate::kCorrect;
  }

  std::span<const Wake> wakes() const { return wake_; }
  std::span<const Fate> fates() const { return fate_; }

  // Latest wake round among waking nodes.
  std::optional<Round> max_wake() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Wake> wake_;
  std::vector<Fate> fate_;
};

Schedule sync_schedule(const PortGraph& g);

struct RandomScheduleParams {
  std::uint64_t seed = 0;
  Round window = 0;
  double p_never = 0.0;
  double p_crash = 0.0;
};

// Deterministic in (seed, node count, parameters). Per node: never with
// p_never, otherwise wake uniform in [0, window] and crash with p_crash.
Schedule random_schedule(const PortGraph& g, const RandomScheduleParams& params);

// Default cap on enumerated schedules; ALSIM_MAX_ENUM overrides.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;
std::uint64_t enumeration_limit_from_env();

struct EnumerationParams {
  Round max_wake = 0;
  bool include_never = false;
  bool include_crash = false;
};

// Every schedule over `node_count` nodes with wake in [0, max_wake] (plus
// never, optionally) and fate in the allowed set. Indexed in mixed radix,
// node 0 least significant, so disjoint index ranges can be explored
// independently.
class ScheduleSpace {
 public:
  ScheduleSpace(std::size_t node_count, EnumerationParams params,
                std::uint64_t limit = enumeration_limit_from_env());

  // Per-node choices: (max_wake + 1) * (1 + crash) + never.
  std::uint64_t choices_per_node() const { return choices_; }
  std::uint64_t size() const { return size_; }
  Schedule at(std::uint64_t index) const;

  // Count without constructing; saturates at UINT64_MAX.
  static std::uint64_t count(std::size_t node_count, EnumerationParams params);

  class Iterator {
   public:
    using value_type = Schedule;
    using difference_type = std::ptrdiff_t;
    Iterator(const ScheduleSpace* space, std::uint64_t index)
        : space_(space), index_(index) {}
    Schedule operator*() const { return space_->at(index_); }
    Iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const Iterator& o) const { return index_ == o.index_; }

   private:
    const ScheduleSpace* space_;
    std::uint64_t index_;
  };

  Iterator begin() const { return {this, 0}; }
  Iterator end() const { return {this, size_}; }

 private:
  std::size_t node_count_;
  EnumerationParams params_;
  std::uint64_t choices_;
  std::uint64_t size_;
};

}  // namespace alsim
