// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/scl/messages.hpp"

#include "oscl/csv.hpp"

namespace oscl::scl {

std::string_view
toString(MsgType type) noexcept
{
  switch (type) {
    case MsgType::Register: return "register";
    case MsgType::DiscoverQuery: return "discover_query";
    case MsgType::DiscoverResponse: return "discover_response";
    case MsgType::Subscribe: return "subscribe";
    case MsgType::Notify: return "notify";
    case MsgType::Interest: return "interest";
    case MsgType::Data: return "data";
    case MsgType::Probe: return "probe";
    case MsgType::LinkUp: return "link_up";
  }
  return "unknown";
}

std::string_view
toString(Role role) noexcept
{
  switch (role) {
    case Role::Originated: return "originated";
    case Role::Relayed: return "relayed";
    case Role::Received: return "received";
    case Role::Dropped: return "dropped";
  }
  return "unknown";
}

void
MessageLog::writeCsv(std::ostream& os, const NodeLabeler& label) const
{
  csv::writeRow(os, {"time", "src", "dst", "relayer", "msg_type", "name"});
  for (const auto& r : m_records) {
    const auto time = std::to_string(sim::toMillis(r.time));
    const auto src = label(r.src);
    const auto dst = label(r.dst);
    const auto relayer = r.relayer ? label(*r.relayer) : std::string();
    csv::writeRow(os, {time, src, dst, relayer, toString(r.type), r.name.toUri()});
  }
}

void
MessageCounters::add(NodeId node, MsgType type, Role role, std::uint64_t n)
{
  if (!isCounted(type)) {
    return;
  }
  m_counts[node][static_cast<std::size_t>(type)][static_cast<std::size_t>(role)] += n;
}

std::uint64_t
MessageCounters::get(NodeId node, MsgType type, Role role) const
{
  auto it = m_counts.find(node);
  if (it == m_counts.end()) {
    return 0;
  }
  return it->second[static_cast<std::size_t>(type)][static_cast<std::size_t>(role)];
}

std::uint64_t
MessageCounters::total(MsgType type, Role role) const
{
  std::uint64_t sum = 0;
  for (const auto& [node, table] : m_counts) {
    sum += table[static_cast<std::size_t>(type)][static_cast<std::size_t>(role)];
  }
  return sum;
}

std::uint64_t
MessageCounters::total(Role role) const
{
  std::uint64_t sum = 0;
  for (std::size_t t = 0; t < kMsgTypeCount; ++t) {
    sum += total(static_cast<MsgType>(t), role);
  }
  return sum;
}

void
MessageCounters::writeCsv(std::ostream& os, const NodeLabeler& label) const
{
  csv::writeRow(os, {"node", "msg_type", "originated", "relayed", "received", "dropped"});
  for (const auto& [node, table] : m_counts) {
    for (std::size_t t = 0; t < kMsgTypeCount; ++t) {
      const auto& row = table[t];
      if (row[0] + row[1] + row[2] + row[3] == 0) {
        continue;
      }
      const auto who = label(node);
      const auto o = std::to_string(row[0]);
      const auto rl = std::to_string(row[1]);
      const auto rc = std::to_string(row[2]);
      const auto d = std::to_string(row[3]);
      csv::writeRow(os, {who, toString(static_cast<MsgType>(t)), o, rl, rc, d});
    }
  }
}

} // namespace oscl::scl
