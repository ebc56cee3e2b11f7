// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_HARNESS_SWEEP_HPP
#define OSCL_HARNESS_SWEEP_HPP

#include "oscl/topo/scaling.hpp"

#include <functional>
#include <ostream>
#include <vector>

namespace oscl::harness {

struct SweepConfig
{
  std::vector<std::uint32_t> nodeCounts;
  std::vector<std::uint32_t> maxHops;
  std::uint32_t seeds = 3;
  std::uint64_t baseSeed = 1;
  double pairsFactor = topo::kDefaultPairsFactor;
  topo::PathComparison comparison = topo::PathComparison::AtMostD;
  /// Wall-clock budget in seconds; N values projected to overrun it are skipped.
  double budgetSeconds = 300.0;
  unsigned jobs = 1;

  /// Throws Error(InvalidArgument) naming the violated bound.
  void
  validate() const;

  /// Seeds used for every (N, D): baseSeed, baseSeed + 1, ...
  std::vector<std::uint64_t>
  seedList() const;
};

struct SweepRun
{
  std::uint32_t nodes;
  std::uint32_t maxHops;
  std::uint64_t seed;
  topo::TopologyStats stats;
};

struct SweepResult
{
  /// Ordered by (N, D, seed) regardless of execution order.
  std::vector<SweepRun> runs;
  std::vector<std::uint32_t> executedNodeCounts;
  std::vector<std::uint32_t> skippedNodeCounts;
  /// One fit per D, over the executed N values.
  std::vector<topo::ScalingFit> fits;
};

/// Runs every (N, D, seed) experiment, ascending in N. Before each N the
/// runtime is projected from the previous N; once the projection exceeds the
/// remaining budget that N and all larger ones are skipped.
SweepResult
runSweep(const SweepConfig& config);

void
writeSweepSummaryCsv(std::ostream& os, const SweepResult& result);

void
writeSweepSeriesCsv(std::ostream& os, const SweepResult& result);

void
writeFitCsv(std::ostream& os, const SweepResult& result);

void
writeSpreadCsv(std::ostream& os, const SweepResult& result);

} // namespace oscl::harness

#endif // OSCL_HARNESS_SWEEP_HPP
