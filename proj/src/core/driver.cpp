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

#include "core/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "core/transform.hpp"

namespace alsim {

const char* model_name(Model m) {
  switch (m) {
    case Model::kLocal: return "local";
    case Model::kAsync: return "async";
    case Model::kDecoupled: return "decoupled";
  }
  return "?";
}

Model parse_model(std::string_view text) {
  if (text == "local") return Model::kLocal;
  if (text == "async") return Model::kAsync;
  if (text == "decoupled") return Model::kDecoupled;
  fail(ErrorCode::kUsage, "unknown model '" + std::string(text) +
                              "' (expected local, async or decoupled)");
}

PartialLabeling RunReport::labels() const {
  PartialLabeling out;
  out.reserve(nodes.size());
  for (const NodeReport& n : nodes) out.push_back(n.output);
  return out;
}

Pipeline::Pipeline(const PortGraph& g, std::optional<LclTask> task,
                   const AlgorithmChoice& algo, RunOptions options)
    : graph_(&g),
      task_(std::move(task)),
      options_(std::move(options)),
      id_bound_(options_.id_bound ? options_.id_bound : g.id_bound()),
      algorithm_name_(algo.spec) {
  validate_ids(g.ids(), id_bound_);
  if (algo.ring_only && !is_oriented_ring(g))
    fail(ErrorCode::kUsage, algo.spec + " requires an oriented ring");

  if (options_.model == Model::kLocal) {
    if (options_.transform)
      fail(ErrorCode::kUsage, "--transform applies to the async and decoupled models");
    if (!algo.is_local())
      fail(ErrorCode::kUsage, algo.spec + " is an asynchronous algorithm");
    local_ = std::get<LocalAlgorithm>(algo.impl);
    return;
  }

  if (options_.model == Model::kDecoupled && !known_symmetric(g))
    fail(ErrorCode::kUsage, "the decoupled model needs a symmetric graph");
  if (algo.is_local()) {
    if (!options_.transform)
      fail(ErrorCode::kUsage,
           algo.spec + " is a LOCAL algorithm; pass --transform to run it here");
    async_ = transform(std::get<LocalAlgorithm>(algo.impl), id_bound_);
  } else {
    if (options_.transform)
      fail(ErrorCode::kUsage, algo.spec + " is already asynchronous");
    async_ = std::get<AsyncAlgorithm>(algo.impl);
  }
}

RunReport Pipeline::run(const Schedule& s) const {
  const auto start = std::chrono::steady_clock::now();
  const PortGraph& g = *graph_;
  const std::size_t n = g.node_count();
  RunReport report;
  report.algorithm = algorithm_name_;
  report.model = options_.model;
  report.id_bound = id_bound_;
  report.nodes.reserve(n);

  if (options_.model == Model::kLocal) {
    report.radius = local_->round_bound(id_bound_);
    auto labels = run_local(g, *local_, id_bound_, g.ids());
    for (NodeIndex v = 0; v < n; ++v) {
      const std::size_t visible = ball(g, v, report.radius).size();
      report.nodes.push_back({v, g.id(v), Round{0}, Fate::kCorrect, visible, labels[v]});
    }
  } else {
    if (s.node_count() != n) fail(ErrorCode::kUsage, "schedule does not match the graph");
    report.tau = async_->tau;
    PartialLabeling labels;
    std::vector<std::size_t> visible;
    if (options_.model == Model::kAsync) {
      AsyncRun r = run_async(g, s, *async_, id_bound_);
      report.radius = r.radius;
      labels = std::move(r.labels);
      visible = std::move(r.visible_counts);
    } else {
      DecoupledOptions opts;
      opts.trace = options_.trace;
      DecoupledRun r = run_decoupled(g, s, *async_, id_bound_, opts);
      report.radius = r.radius;
      labels = std::move(r.labels);
      visible = std::move(r.visible_counts);
    }
    for (NodeIndex v = 0; v < n; ++v)
      report.nodes.push_back({v, g.id(v), s.wake(v), s.fate(v), visible[v], labels[v]});
  }

  if (task_) report.verdict = check_partial(*task_, g, report.labels());
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

EnumerateSummary enumerate(const Pipeline& pipeline, const ScheduleSpace& space,
                           unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t total = space.size();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));

  EnumerateSummary summary;
  summary.total = total;
  std::atomic<std::uint64_t> failed{0};
  std::mutex mu;
  std::exception_ptr error;

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    try {
      for (std::uint64_t i = begin; i < end; ++i) {
        RunReport r = pipeline.run(space.at(i));
        if (!r.verdict)
          fail(ErrorCode::kUsage, "enumeration needs a task to check against");
        if (r.verdict->ok) continue;
        failed.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard lock(mu);
        if (!summary.first_failure || i < *summary.first_failure) {
          summary.first_failure = i;
          summary.witness = r.verdict->witness;
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, w * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin < end) threads.emplace_back(work, begin, end);
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  summary.failed = failed.load();
  summary.passed = total - summary.failed;
  return summary;
}

CompareResult compare(const PortGraph& g, const Schedule& s,
                      const AlgorithmChoice& algo, bool transform, Id id_bound,
                      const TraceSink& trace) {
  RunOptions async_opts{Model::kAsync, transform, id_bound, {}};
  RunOptions decoupled_opts{Model::kDecoupled, transform, id_bound, trace};
  CompareResult out;
  out.async = Pipeline(g, std::nullopt, algo, async_opts).run(s);
  out.decoupled = Pipeline(g, std::nullopt, algo, decoupled_opts).run(s);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (out.async.nodes[v].output == out.decoupled.nodes[v].output) continue;
    ++out.mismatches;
    if (!out.first_mismatch) out.first_mismatch = v;
  }
  return out;
}

}  // namespace alsim
