// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_TOPO_EXPERIMENT_HPP
#define OSCL_TOPO_EXPERIMENT_HPP

#include "oscl/topo/bfs.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace oscl::topo {

/// How the hop bound D is applied when deciding whether a pair needs a link.
enum class PathComparison {
  /// An existing path of length <= D is acceptable.
  AtMostD,
  /// Only a path of length < D is acceptable.
  StrictlyLessD,
};

std::string_view
toString(PathComparison c) noexcept;

PathComparison
parsePathComparison(std::string_view text);

inline constexpr double kDefaultPairsFactor = 50.0;

/// ceil(factor * N * ln N): length of the "long random sequence" of pairs.
std::uint64_t
defaultPairCount(std::uint32_t nodes, double factor = kDefaultPairsFactor);

struct ExperimentConfig
{
  std::uint32_t nodes = 32;
  std::uint32_t maxHops = 3;
  std::uint64_t pairCount = 0; ///< 0 selects defaultPairCount(nodes)
  std::uint64_t seed = 1;
  PathComparison comparison = PathComparison::AtMostD;
  std::uint64_t sampleStride = 0;     ///< 0 selects N
  std::uint64_t saturationWindow = 0; ///< 0 selects 10 * N

  /// Fills the zero-valued defaults and checks the bounds (N >= 2, D >= 1,
  /// pair count >= 1). Throws Error(InvalidArgument) naming the bound.
  ExperimentConfig
  resolved() const;
};

struct DegreeSample
{
  std::uint64_t pairIndex;
  double averageDegree;

  bool
  operator==(const DegreeSample&) const = default;
};

struct TopologyStats
{
  std::vector<DegreeSample> degreeSeries;
  double finalDegree = 0.0;
  std::uint64_t edgeCount = 0;
  std::uint64_t linksCreated = 0;
  /// No link was created during the final saturation window.
  bool saturated = false;

  bool
  operator==(const TopologyStats&) const = default;
};

struct ExperimentRun
{
  TopologyStats stats;
  Adjacency graph;
};

/**
 * Starts from N isolated vertices and draws pairCount unordered pairs of
 * distinct vertices. A direct link joins a pair iff no acceptable path (per
 * the comparison) already connects it. Links are never removed.
 */
ExperimentRun
runTopologyExperimentWithGraph(const ExperimentConfig& config);

TopologyStats
runTopologyExperiment(const ExperimentConfig& config);

/// (2 N ln N)^(1/D), natural log, no constant factor.
double
predictedDegree(double nodes, std::uint32_t maxHops);

} // namespace oscl::topo

#endif // OSCL_TOPO_EXPERIMENT_HPP
