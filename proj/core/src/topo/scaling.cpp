// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/topo/scaling.hpp"

#include "oscl/error.hpp"

#include <algorithm>
#include <map>

namespace oscl::topo {

bool
ScalingFit::allSaturated() const
{
  return std::all_of(rows.begin(), rows.end(), [] (const ScalingRow& r) { return r.saturated; });
}

ScalingFit
summarizeScaling(std::uint32_t maxHops, std::span<const RunSummary> runs)
{
  struct Acc
  {
    double sum = 0.0;
    std::size_t count = 0;
    bool saturated = true;
  };
  std::map<std::uint32_t, Acc> byN;
  for (const auto& run : runs) {
    if (run.maxHops != maxHops) {
      continue;
    }
    auto& acc = byN[run.nodes];
    acc.sum += run.finalDegree;
    ++acc.count;
    acc.saturated = acc.saturated && run.saturated;
  }

  ScalingFit fit;
  fit.maxHops = maxHops;
  for (const auto& [n, acc] : byN) {
    ScalingRow row{};
    row.nodes = n;
    row.maxHops = maxHops;
    row.measuredDegree = acc.sum / static_cast<double>(acc.count);
    row.predicted = predictedDegree(n, maxHops);
    row.ratio = row.measuredDegree / row.predicted;
    row.seedCount = acc.count;
    row.saturated = acc.saturated;
    fit.rows.push_back(row);
  }
  if (!fit.rows.empty()) {
    auto [lo, hi] = std::minmax_element(fit.rows.begin(), fit.rows.end(),
                                        [] (const ScalingRow& a, const ScalingRow& b) {
                                          return a.ratio < b.ratio;
                                        });
    fit.spread = hi->ratio / lo->ratio;
  }
  for (std::size_t i = 1; i < fit.rows.size(); ++i) {
    if (fit.rows[i].measuredDegree < fit.rows[i - 1].measuredDegree) {
      fit.monotoneInN = false;
    }
  }
  return fit;
}

ScalingFit
scalingCheck(std::span<const std::uint32_t> nodeCounts, std::uint32_t maxHops, double pairsFactor,
             std::span<const std::uint64_t> seeds, PathComparison comparison)
{
  if (nodeCounts.empty() || seeds.empty()) {
    throw Error(Errc::InvalidArgument, "scaling check needs at least one N and one seed");
  }
  std::vector<RunSummary> runs;
  for (auto n : nodeCounts) {
    for (auto seed : seeds) {
      ExperimentConfig config;
      config.nodes = n;
      config.maxHops = maxHops;
      config.pairCount = defaultPairCount(n, pairsFactor);
      config.seed = seed;
      config.comparison = comparison;
      auto stats = runTopologyExperiment(config);
      runs.push_back({n, maxHops, seed, stats.finalDegree, stats.saturated});
    }
  }
  return summarizeScaling(maxHops, runs);
}

} // namespace oscl::topo
