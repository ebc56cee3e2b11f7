// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_SCL_MESSAGES_HPP
#define OSCL_SCL_MESSAGES_HPP

#include "oscl/ids.hpp"
#include "oscl/names/name.hpp"
#include "oscl/sim/clock.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace oscl::scl {

enum class MsgType : std::uint8_t {
  Register,
  DiscoverQuery,
  DiscoverResponse,
  Subscribe,
  Notify,
  Interest,
  Data,
  Probe,
  LinkUp,
};

inline constexpr std::size_t kMsgTypeCount = 9;

std::string_view
toString(MsgType type) noexcept;

/// Probes and link events are logged but never counted.
constexpr bool
isCounted(MsgType type) noexcept
{
  return type != MsgType::Probe && type != MsgType::LinkUp;
}

enum class Role : std::uint8_t {
  Originated,
  Relayed,
  Received,
  Dropped,
};

inline constexpr std::size_t kRoleCount = 4;

std::string_view
toString(Role role) noexcept;

struct MessageRecord
{
  sim::Time time;
  NodeId src;
  NodeId dst;
  std::optional<NodeId> relayer;
  MsgType type;
  Name name;
};

using NodeLabeler = std::function<std::string(NodeId)>;

/// CSV columns: time,src,dst,relayer,msg_type,name
class MessageLog
{
public:
  void
  append(MessageRecord record)
  {
    m_records.push_back(std::move(record));
  }

  const std::vector<MessageRecord>&
  records() const noexcept
  {
    return m_records;
  }

  void
  writeCsv(std::ostream& os, const NodeLabeler& label) const;

private:
  std::vector<MessageRecord> m_records;
};

/// Per-node message counts keyed by type and role.
class MessageCounters
{
public:
  void
  add(NodeId node, MsgType type, Role role, std::uint64_t n = 1);

  std::uint64_t
  get(NodeId node, MsgType type, Role role) const;

  /// Sum over all nodes.
  std::uint64_t
  total(MsgType type, Role role) const;

  /// Sum over all nodes and all counted types.
  std::uint64_t
  total(Role role) const;

  /// CSV columns: node,msg_type,originated,relayed,received,dropped
  /// Only rows with a non-zero count are written.
  void
  writeCsv(std::ostream& os, const NodeLabeler& label) const;

private:
  using Table = std::array<std::array<std::uint64_t, kRoleCount>, kMsgTypeCount>;
  std::map<NodeId, Table> m_counts;
};

} // namespace oscl::scl

#endif // OSCL_SCL_MESSAGES_HPP
