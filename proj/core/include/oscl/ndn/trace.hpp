// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NDN_TRACE_HPP
#define OSCL_NDN_TRACE_HPP

#include "oscl/ndn/node.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace oscl::ndn {

enum class Direction {
  In,
  Out,
  Drop,
};

enum class PacketKind {
  Interest,
  Data,
};

struct TraceRecord
{
  sim::Time time;
  NodeId node;
  Direction direction;
  PacketKind kind;
  Name name;
  std::optional<std::uint64_t> nonce;
  std::optional<FaceId> face;
  std::optional<DropReason> reason;
};

/// Per-hop packet trace. CSV columns: time,node,direction,kind,name,nonce,face
class EmissionTrace
{
public:
  void
  recordArrival(sim::Time t, NodeId node, const Interest& interest, FaceId face);

  void
  recordArrival(sim::Time t, NodeId node, const Data& data, FaceId face);

  /// `trigger` is the packet whose processing produced the emissions; a Drop
  /// is logged against it.
  void
  recordEmissions(sim::Time t, NodeId node, PacketKind trigger, const Name& name,
                  std::optional<std::uint64_t> nonce, std::span<const Emission> emissions);

  const std::vector<TraceRecord>&
  records() const noexcept
  {
    return m_records;
  }

  void
  clear()
  {
    m_records.clear();
  }

  void
  writeCsv(std::ostream& os) const;

private:
  std::vector<TraceRecord> m_records;
};

} // namespace oscl::ndn

#endif // OSCL_NDN_TRACE_HPP
