// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/topo/experiment.hpp"

#include "oscl/error.hpp"
#include "oscl/sim/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oscl::topo {

std::string_view
toString(PathComparison c) noexcept
{
  return c == PathComparison::AtMostD ? "at-most-D" : "strictly-less-D";
}

PathComparison
parsePathComparison(std::string_view text)
{
  if (text == "at-most-D" || text == "at-most") {
    return PathComparison::AtMostD;
  }
  if (text == "strictly-less-D" || text == "strictly-less") {
    return PathComparison::StrictlyLessD;
  }
  throw Error(Errc::InvalidArgument, "unknown path comparison '" + std::string(text) + "'");
}

std::uint64_t
defaultPairCount(std::uint32_t nodes, double factor)
{
  if (nodes < 2) {
    throw Error(Errc::InvalidArgument, "N must be >= 2 (got " + std::to_string(nodes) + ")");
  }
  const double n = nodes;
  return static_cast<std::uint64_t>(std::ceil(factor * n * std::log(n)));
}

ExperimentConfig
ExperimentConfig::resolved() const
{
  if (nodes < 2) {
    throw Error(Errc::InvalidArgument, "N must be >= 2 (got " + std::to_string(nodes) + ")");
  }
  if (maxHops < 1) {
    throw Error(Errc::InvalidArgument, "D must be >= 1 (got " + std::to_string(maxHops) + ")");
  }
  ExperimentConfig out = *this;
  if (out.pairCount == 0) {
    out.pairCount = defaultPairCount(nodes);
  }
  if (out.sampleStride == 0) {
    out.sampleStride = nodes;
  }
  if (out.saturationWindow == 0) {
    out.saturationWindow = 10ULL * nodes;
  }
  return out;
}

ExperimentRun
runTopologyExperimentWithGraph(const ExperimentConfig& requested)
{
  const auto config = requested.resolved();
  const std::uint32_t n = config.nodes;
  // a path of length < D is a path of length <= D - 1
  const std::uint32_t bound = config.comparison == PathComparison::AtMostD ? config.maxHops
                                                                            : config.maxHops - 1;

  ExperimentRun run;
  run.graph.assign(n, {});
  auto& stats = run.stats;
  sim::Rng rng(config.seed);
  BoundedPathFinder finder;
  std::uint64_t lastLinkAt = 0;

  auto hasEdge = [&run] (std::uint32_t u, std::uint32_t v) {
    const auto& a = run.graph[u];
    const auto& b = run.graph[v];
    const auto& shorter = a.size() <= b.size() ? a : b;
    const auto other = a.size() <= b.size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
  };

  for (std::uint64_t i = 1; i <= config.pairCount; ++i) {
    auto [u, v] = rng.distinctPair(n);
    if (!finder.distance(run.graph, u, v, bound) && !hasEdge(u, v)) {
      run.graph[u].push_back(v);
      run.graph[v].push_back(u);
      ++stats.edgeCount;
      ++stats.linksCreated;
      lastLinkAt = i;
    }
    if (i % config.sampleStride == 0 || i == config.pairCount) {
      stats.degreeSeries.push_back({i, 2.0 * static_cast<double>(stats.edgeCount) / n});
    }
  }

  stats.finalDegree = 2.0 * static_cast<double>(stats.edgeCount) / n;
  stats.saturated = config.pairCount - lastLinkAt >= config.saturationWindow;
  return run;
}

TopologyStats
runTopologyExperiment(const ExperimentConfig& config)
{
  return runTopologyExperimentWithGraph(config).stats;
}

double
predictedDegree(double nodes, std::uint32_t maxHops)
{
  if (!(nodes >= 2.0)) {
    throw Error(Errc::DomainError, "predicted degree needs N >= 2");
  }
  if (maxHops < 1) {
    throw Error(Errc::DomainError, "predicted degree needs D >= 1");
  }
  return std::pow(2.0 * nodes * std::log(nodes), 1.0 / maxHops);
}

} // namespace oscl::topo
