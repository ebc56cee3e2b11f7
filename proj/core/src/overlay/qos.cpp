// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/overlay/qos.hpp"

#include "oscl/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

namespace oscl::overlay {

QosMetrics::QosMetrics(double lossRatio, double meanDelayMs, double throughput,
                       std::uint64_t sampleCount)
  : m_loss(lossRatio)
  , m_delay(meanDelayMs)
  , m_throughput(throughput)
  , m_samples(sampleCount)
{
}

void
QosMetrics::requireSamples() const
{
  if (m_samples == 0) {
    throw Error(Errc::InvalidArgument, "QoS metrics hold no samples");
  }
}

double
QosMetrics::lossRatio() const
{
  requireSamples();
  return m_loss;
}

double
QosMetrics::meanDelayMs() const
{
  requireSamples();
  return m_delay;
}

double
QosMetrics::throughput() const
{
  requireSamples();
  return m_throughput;
}

void
QosPolicy::validate() const
{
  if (maxPathHops < 1) {
    throw Error(Errc::InvalidArgument, "D must be >= 1");
  }
  if (!(maxLoss > 0.0 && maxLoss <= 1.0)) {
    throw Error(Errc::InvalidArgument, "max loss must be in (0, 1]");
  }
  if (!(maxDelayMs > 0.0) || !(minThroughput > 0.0)) {
    throw Error(Errc::InvalidArgument, "delay and throughput thresholds must be positive");
  }
}

bool
QosPolicy::acceptsPathLength(std::size_t hops) const noexcept
{
  return comparison == topo::PathComparison::AtMostD ? hops <= maxPathHops : hops < maxPathHops;
}

bool
QosPolicy::accepts(const QosMetrics& m) const
{
  return m.lossRatio() <= maxLoss && m.meanDelayMs() <= maxDelayMs &&
         m.throughput() >= minThroughput;
}

QosMetrics
measurePath(const OverlayGraph& graph, std::span<const NodeId> path, std::uint64_t probes,
            sim::Rng& rng)
{
  if (path.empty()) {
    throw Error(Errc::InvalidArgument, "path must name at least one node");
  }
  if (probes == 0) {
    throw Error(Errc::InvalidArgument, "probe count must be at least 1");
  }

  std::vector<const LinkMetrics*> links;
  double pathDelay = 0.0;
  double bottleneck = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Edge* e = graph.findEdge(path[i], path[i + 1]);
    if (e == nullptr) {
      std::ostringstream msg;
      msg << "no overlay link between " << path[i] << " and " << path[i + 1];
      throw Error(Errc::BrokenPath, msg.str());
    }
    links.push_back(&e->metrics);
    pathDelay += e->metrics.delayMs;
    bottleneck = std::min(bottleneck, e->metrics.capacity);
  }

  std::uint64_t delivered = 0;
  for (std::uint64_t p = 0; p < probes; ++p) {
    bool lost = false;
    for (const auto* link : links) {
      if (rng.bernoulli(link->loss)) {
        lost = true;
        break;
      }
    }
    if (!lost) {
      ++delivered;
    }
  }

  const double loss = static_cast<double>(probes - delivered) / static_cast<double>(probes);
  const double delay = delivered == 0 ? std::numeric_limits<double>::infinity() : pathDelay;
  return QosMetrics(loss, delay, bottleneck, probes);
}

} // namespace oscl::overlay
