// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/harness/topology_csv.hpp"

#include "oscl/csv.hpp"

#include <string>

namespace oscl::harness {

void
writeSeriesHeader(std::ostream& os)
{
  csv::writeRow(os, {"N", "D", "seed", "pair_index", "avg_degree"});
}

void
writeSeriesRows(std::ostream& os, std::uint32_t nodes, std::uint32_t maxHops, std::uint64_t seed,
                const topo::TopologyStats& stats)
{
  const auto n = std::to_string(nodes);
  const auto d = std::to_string(maxHops);
  const auto s = std::to_string(seed);
  for (const auto& sample : stats.degreeSeries) {
    csv::writeRow(os, {n, d, s, std::to_string(sample.pairIndex),
                       csv::number(sample.averageDegree)});
  }
}

void
writeSummaryHeader(std::ostream& os)
{
  csv::writeRow(os, {"N", "D", "seed", "final_degree", "predicted", "ratio", "saturated"});
}

void
writeSummaryRow(std::ostream& os, std::uint32_t nodes, std::uint32_t maxHops, std::uint64_t seed,
                const topo::TopologyStats& stats)
{
  const double predicted = topo::predictedDegree(nodes, maxHops);
  csv::writeRow(os, {std::to_string(nodes), std::to_string(maxHops), std::to_string(seed),
                     csv::number(stats.finalDegree), csv::number(predicted),
                     csv::number(stats.finalDegree / predicted), stats.saturated ? "1" : "0"});
}

} // namespace oscl::harness
