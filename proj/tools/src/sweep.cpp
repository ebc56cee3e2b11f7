// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/harness/sweep.hpp"

#include "oscl/csv.hpp"
#include "oscl/error.hpp"
#include "oscl/harness/topology_csv.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace oscl::harness {

void
SweepConfig::validate() const
{
  if (nodeCounts.empty()) {
    throw Error(Errc::InvalidArgument, "the N list must not be empty");
  }
  if (maxHops.empty()) {
    throw Error(Errc::InvalidArgument, "the D list must not be empty");
  }
  for (auto n : nodeCounts) {
    if (n < 2) {
      throw Error(Errc::InvalidArgument, "N must be >= 2 (got " + std::to_string(n) + ")");
    }
  }
  for (auto d : maxHops) {
    if (d < 1) {
      throw Error(Errc::InvalidArgument, "D must be >= 1 (got 0)");
    }
  }
  if (seeds < 1) {
    throw Error(Errc::InvalidArgument, "seeds must be >= 1 (got 0)");
  }
  if (!(pairsFactor > 0.0)) {
    throw Error(Errc::InvalidArgument, "pairs factor must be > 0");
  }
  if (std::isnan(budgetSeconds) || budgetSeconds < 0.0) {
    throw Error(Errc::InvalidArgument, "time budget must be >= 0 seconds");
  }
  if (jobs < 1) {
    throw Error(Errc::InvalidArgument, "jobs must be >= 1 (got 0)");
  }
}

std::vector<std::uint64_t>
SweepConfig::seedList() const
{
  std::vector<std::uint64_t> out;
  for (std::uint32_t i = 0; i < seeds; ++i) {
    out.push_back(baseSeed + i);
  }
  return out;
}

namespace {

/// Relative cost of one N: pair count times the growth of a bounded search.
double
costModel(std::uint32_t n, double pairsFactor)
{
  return static_cast<double>(topo::defaultPairCount(n, pairsFactor)) * std::sqrt(n);
}

} // namespace

SweepResult
runSweep(const SweepConfig& config)
{
  config.validate();
  using Clock = std::chrono::steady_clock;

  auto ns = config.nodeCounts;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  auto ds = config.maxHops;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  const auto seeds = config.seedList();

  SweepResult result;
  const auto start = Clock::now();
  double lastSeconds = 0.0;
  std::uint32_t lastN = 0;
  bool stop = config.budgetSeconds <= 0.0;

  for (auto n : ns) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (!stop && lastN != 0) {
      const double projected =
        lastSeconds * costModel(n, config.pairsFactor) / costModel(lastN, config.pairsFactor);
      stop = elapsed + projected > config.budgetSeconds;
    }
    if (stop) {
      result.skippedNodeCounts.push_back(n);
      continue;
    }

    struct Task
    {
      std::uint32_t d;
      std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (auto d : ds) {
      for (auto s : seeds) {
        tasks.push_back({d, s});
      }
    }
    std::vector<topo::TopologyStats> stats(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
        topo::ExperimentConfig ec;
        ec.nodes = n;
        ec.maxHops = tasks[i].d;
        ec.seed = tasks[i].seed;
        ec.comparison = config.comparison;
        ec.pairCount = topo::defaultPairCount(n, config.pairsFactor);
        stats[i] = topo::runTopologyExperiment(ec);
      }
    };

    const auto groupStart = Clock::now();
    const auto threads = std::min<std::size_t>(config.jobs, tasks.size());
    if (threads <= 1) {
      worker();
    }
    else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
    }
    lastSeconds = std::chrono::duration<double>(Clock::now() - groupStart).count();
    lastN = n;

    for (std::size_t i = 0; i < tasks.size(); ++i) {
      result.runs.push_back({n, tasks[i].d, tasks[i].seed, std::move(stats[i])});
    }
    result.executedNodeCounts.push_back(n);
  }

  std::sort(result.runs.begin(), result.runs.end(), [] (const auto& a, const auto& b) {
    return std::tie(a.nodes, a.maxHops, a.seed) < std::tie(b.nodes, b.maxHops, b.seed);
  });
  if (!result.executedNodeCounts.empty()) {
    for (auto d : ds) {
      std::vector<topo::RunSummary> summaries;
      for (const auto& r : result.runs) {
        if (r.maxHops == d) {
          summaries.push_back({r.nodes, r.maxHops, r.seed, r.stats.finalDegree, r.stats.saturated});
        }
      }
      result.fits.push_back(topo::summarizeScaling(d, summaries));
    }
  }
  return result;
}

void
writeSweepSummaryCsv(std::ostream& os, const SweepResult& result)
{
  writeSummaryHeader(os);
  for (const auto& r : result.runs) {
    writeSummaryRow(os, r.nodes, r.maxHops, r.seed, r.stats);
  }
}

void
writeSweepSeriesCsv(std::ostream& os, const SweepResult& result)
{
  writeSeriesHeader(os);
  for (const auto& r : result.runs) {
    writeSeriesRows(os, r.nodes, r.maxHops, r.seed, r.stats);
  }
}

void
writeFitCsv(std::ostream& os, const SweepResult& result)
{
  csv::writeRow(os, {"N", "D", "measured_degree", "predicted", "ratio", "seeds", "saturated"});
  for (const auto& fit : result.fits) {
    for (const auto& row : fit.rows) {
      csv::writeRow(os, {std::to_string(row.nodes), std::to_string(row.maxHops),
                         csv::number(row.measuredDegree), csv::number(row.predicted),
                         csv::number(row.ratio), std::to_string(row.seedCount),
                         row.saturated ? "1" : "0"});
    }
  }
}

void
writeSpreadCsv(std::ostream& os, const SweepResult& result)
{
  csv::writeRow(os, {"D", "spread", "monotone_in_n", "all_saturated"});
  for (const auto& fit : result.fits) {
    csv::writeRow(os, {std::to_string(fit.maxHops), csv::number(fit.spread),
                       fit.monotoneInN ? "1" : "0", fit.allSaturated() ? "1" : "0"});
  }
}

} // namespace oscl::harness
