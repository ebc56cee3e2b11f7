// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_TOPO_SCALING_HPP
#define OSCL_TOPO_SCALING_HPP

#include "oscl/topo/experiment.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace oscl::topo {

/// Outcome of one (N, D, seed) experiment.
struct RunSummary
{
  std::uint32_t nodes;
  std::uint32_t maxHops;
  std::uint64_t seed;
  double finalDegree;
  bool saturated;
};

struct ScalingRow
{
  std::uint32_t nodes;
  std::uint32_t maxHops;
  double measuredDegree; ///< mean over seeds
  double predicted;
  double ratio;
  std::size_t seedCount;
  /// False when any seed ended before saturation; a warning, not a failure.
  bool saturated;
};

/// Rows for a single D, ordered by N.
struct ScalingFit
{
  std::uint32_t maxHops = 0;
  std::vector<ScalingRow> rows;
  /// max ratio / min ratio over the rows; 1.0 for a single row.
  double spread = 1.0;
  bool monotoneInN = true;

  bool
  allSaturated() const;
};

/// Groups runs of one D by N, averages over seeds, compares with the prediction.
ScalingFit
summarizeScaling(std::uint32_t maxHops, std::span<const RunSummary> runs);

/// Runs every (N, seed) experiment for one D and summarizes them.
ScalingFit
scalingCheck(std::span<const std::uint32_t> nodeCounts, std::uint32_t maxHops, double pairsFactor,
             std::span<const std::uint64_t> seeds,
             PathComparison comparison = PathComparison::AtMostD);

} // namespace oscl::topo

#endif // OSCL_TOPO_SCALING_HPP
