// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/ndn/trace.hpp"

#include "oscl/csv.hpp"

#include <string>

namespace oscl::ndn {

void
EmissionTrace::recordArrival(sim::Time t, NodeId node, const Interest& interest, FaceId face)
{
  m_records.push_back({t, node, Direction::In, PacketKind::Interest, interest.name,
                       interest.nonce, face, std::nullopt});
}

void
EmissionTrace::recordArrival(sim::Time t, NodeId node, const Data& data, FaceId face)
{
  m_records.push_back({t, node, Direction::In, PacketKind::Data, data.name,
                       std::nullopt, face, std::nullopt});
}

void
EmissionTrace::recordEmissions(sim::Time t, NodeId node, PacketKind trigger, const Name& name,
                               std::optional<std::uint64_t> nonce,
                               std::span<const Emission> emissions)
{
  for (const auto& e : emissions) {
    if (const auto* si = std::get_if<SendInterest>(&e)) {
      m_records.push_back({t, node, Direction::Out, PacketKind::Interest, si->interest.name,
                           si->interest.nonce, si->face, std::nullopt});
    }
    else if (const auto* sd = std::get_if<SendData>(&e)) {
      m_records.push_back({t, node, Direction::Out, PacketKind::Data, sd->data.name,
                           std::nullopt, sd->face, std::nullopt});
    }
    else {
      m_records.push_back({t, node, Direction::Drop, trigger, name, nonce, std::nullopt,
                           std::get<Drop>(e).reason});
    }
  }
}

void
EmissionTrace::writeCsv(std::ostream& os) const
{
  csv::writeRow(os, {"time", "node", "direction", "kind", "name", "nonce", "face"});
  for (const auto& r : m_records) {
    std::string direction = r.direction == Direction::In ? "in" : r.direction == Direction::Out ? "out" : "drop";
    if (r.reason) {
      direction += ":";
      direction += toString(*r.reason);
    }
    const auto time = std::to_string(sim::toMillis(r.time));
    const auto node = std::to_string(r.node.value());
    const auto nonce = r.nonce ? std::to_string(*r.nonce) : std::string();
    const auto face = r.face ? std::to_string(r.face->value()) : std::string();
    csv::writeRow(os, {time, node, direction, r.kind == PacketKind::Interest ? "interest" : "data",
                       r.name.toUri(), nonce, face});
  }
}

} // namespace oscl::ndn
