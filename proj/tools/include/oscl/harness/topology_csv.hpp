// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_HARNESS_TOPOLOGY_CSV_HPP
#define OSCL_HARNESS_TOPOLOGY_CSV_HPP

#include "oscl/topo/experiment.hpp"

#include <ostream>

namespace oscl::harness {

/// Columns: N,D,seed,pair_index,avg_degree
void
writeSeriesHeader(std::ostream& os);

void
writeSeriesRows(std::ostream& os, std::uint32_t nodes, std::uint32_t maxHops, std::uint64_t seed,
                const topo::TopologyStats& stats);

/// Columns: N,D,seed,final_degree,predicted,ratio,saturated
void
writeSummaryHeader(std::ostream& os);

void
writeSummaryRow(std::ostream& os, std::uint32_t nodes, std::uint32_t maxHops, std::uint64_t seed,
                const topo::TopologyStats& stats);

} // namespace oscl::harness

#endif // OSCL_HARNESS_TOPOLOGY_CSV_HPP
