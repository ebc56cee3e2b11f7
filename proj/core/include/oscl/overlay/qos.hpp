// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_OVERLAY_QOS_HPP
#define OSCL_OVERLAY_QOS_HPP

#include "oscl/overlay/overlay_graph.hpp"
#include "oscl/sim/random.hpp"
#include "oscl/topo/experiment.hpp"

#include <cstdint>
#include <span>

namespace oscl::overlay {

/// Key performance indicators of one overlay path. Reading a field of a
/// measurement with no samples throws InvalidArgument.
class QosMetrics
{
public:
  QosMetrics() = default;

  QosMetrics(double lossRatio, double meanDelayMs, double throughput, std::uint64_t sampleCount);

  double
  lossRatio() const;

  /// Mean end-to-end delay of delivered probes; +inf when none arrived.
  double
  meanDelayMs() const;

  /// Bottleneck capacity along the path.
  double
  throughput() const;

  std::uint64_t
  sampleCount() const noexcept
  {
    return m_samples;
  }

private:
  void
  requireSamples() const;

  double m_loss = 0.0;
  double m_delay = 0.0;
  double m_throughput = 0.0;
  std::uint64_t m_samples = 0;
};

struct QosPolicy
{
  /// D: longest acceptable overlay path.
  std::uint32_t maxPathHops = 3;
  double maxLoss = 0.05;
  double maxDelayMs = 200.0;
  double minThroughput = 1.0;
  topo::PathComparison comparison = topo::PathComparison::AtMostD;

  /// Throws InvalidArgument when a threshold is out of range.
  void
  validate() const;

  bool
  acceptsPathLength(std::size_t hops) const noexcept;

  bool
  accepts(const QosMetrics& metrics) const;
};

/**
 * Sends `probes` probe packets along `path`. Each hop drops a probe
 * independently with the link's loss probability; delays add up along the
 * path. Throws BrokenPath if a consecutive pair is not linked.
 */
QosMetrics
measurePath(const OverlayGraph& graph, std::span<const NodeId> path, std::uint64_t probes,
            sim::Rng& rng);

} // namespace oscl::overlay

#endif // OSCL_OVERLAY_QOS_HPP
