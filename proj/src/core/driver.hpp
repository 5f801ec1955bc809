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

// Experiment pipelines behind the command-line driver: one run, exhaustive
// schedule enumeration, and asynchronous-versus-decoupled comparison.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/decoupled.hpp"
#include "core/io.hpp"

namespace alsim {

enum class Model { kLocal, kAsync, kDecoupled };

const char* model_name(Model m);
Model parse_model(std::string_view text);

struct RunOptions {
  Model model = Model::kLocal;
  bool transform = false;
  Id id_bound = 0;  // 0: the graph's declared bound
  TraceSink trace;
};

struct NodeReport {
  NodeIndex node;
  Id id;
  Wake wake;
  Fate fate;
  std::size_t visible;
  std::optional<Label> output;
};

struct RunReport {
  std::string algorithm;
  Model model = Model::kLocal;
  Id id_bound = 0;
  std::vector<NodeReport> nodes;
  std::optional<std::uint64_t> tau;
  std::uint64_t radius = 0;  // LOCAL rounds or snapshot radius
  std::optional<CheckResult> verdict;  // absent when no task was given
  double wall_ms = 0.0;

  PartialLabeling labels() const;
};

// Validates the model/algorithm/graph combination once (kUsage on a bad
// combination) so the same pipeline can be run under many schedules.
class Pipeline {
 public:
  Pipeline(const PortGraph& g, std::optional<LclTask> task,
           const AlgorithmChoice& algo, RunOptions options);

  // The local model ignores the schedule.
  RunReport run(const Schedule& s) const;

  Id id_bound() const { return id_bound_; }
  const PortGraph& graph() const { return *graph_; }

 private:
  const PortGraph* graph_;
  std::optional<LclTask> task_;
  RunOptions options_;
  Id id_bound_;
  std::string algorithm_name_;
  std::optional<LocalAlgorithm> local_;
  std::optional<AsyncAlgorithm> async_;
};

struct EnumerateSummary {
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::uint64_t> first_failure;  // lowest failing index
  std::optional<NodeIndex> witness;            // of that failure
};

// Runs every schedule of the space. The pipeline must carry a task. Work is
// split across `workers` threads by index range; 0 picks the hardware count.
EnumerateSummary enumerate(const Pipeline& pipeline, const ScheduleSpace& space,
                           unsigned workers = 0);

struct CompareResult {
  RunReport async;
  RunReport decoupled;
  std::size_t mismatches = 0;
  std::optional<NodeIndex> first_mismatch;
};

CompareResult compare(const PortGraph& g, const Schedule& s,
                      const AlgorithmChoice& algo, bool transform, Id id_bound,
                      const TraceSink& trace = {});

}  // namespace alsim
