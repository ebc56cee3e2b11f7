// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_SCL_M2M_SYSTEM_HPP
#define OSCL_SCL_M2M_SYSTEM_HPP

#include "oscl/scl/messages.hpp"
#include "oscl/scl/scl_instance.hpp"
#include "oscl/sim/scheduler.hpp"

#include <deque>
#include <functional>
#include <optional>
#include <vector>

namespace oscl::scl {

enum class DiscoveryMethod {
  Distributed,
  Centralized,
};

std::string_view
toString(DiscoveryMethod method) noexcept;

struct DiscoveryResult
{
  Name uri;
  Locator locator;
  /// Overlay walk origin..target; present iff method is Distributed.
  std::optional<std::vector<NodeId>> path;
  DiscoveryMethod method;

  /// Number of overlay hops on the path, if any.
  std::optional<std::size_t>
  hopCount() const
  {
    if (!path) {
      return std::nullopt;
    }
    return path->size() - 1;
  }
};

/// Invoked once per new content instance on a container holding active
/// peer-to-peer subscriptions. The overlay layer installs it.
using P2pPublisher =
  std::function<void(NodeId owner, const Name& container, const ContentInstance& instance)>;

/**
 * A simulated ETSI M2M deployment: every SCL instance, the shared simulated
 * clock, and the message log/counters.
 *
 * Operations named after the standard's centralized procedures route every
 * exchange between two non-NSCL instances through the NSCL.
 */
class M2mSystem
{
public:
  NodeId
  addScl(SclKind kind, std::string_view baseName, ndn::NodeConfig forwarding = {});

  NodeId
  addScl(SclKind kind, std::string_view baseName, Locator locator, ndn::NodeConfig forwarding = {});

  SclInstance&
  scl(NodeId id);

  const SclInstance&
  scl(NodeId id) const;

  bool
  contains(NodeId id) const noexcept
  {
    return id.value() < m_instances.size();
  }

  std::size_t
  size() const noexcept
  {
    return m_instances.size();
  }

  /// The single NSCL. Throws NotFound if none was added.
  NodeId
  nscl() const;

  std::optional<NodeId>
  findByBaseName(const Name& baseName) const;

  /// The instance whose base name is a prefix of `name`.
  std::optional<NodeId>
  owner(const Name& name) const;

  std::string
  label(NodeId id) const;

  NodeLabeler
  labeler() const
  {
    return [this] (NodeId id) { return label(id); };
  }

  sim::Scheduler&
  scheduler() noexcept
  {
    return m_scheduler;
  }

  sim::Time
  now() const noexcept
  {
    return m_scheduler.now();
  }

  MessageLog&
  log() noexcept
  {
    return m_log;
  }

  const MessageLog&
  log() const noexcept
  {
    return m_log;
  }

  MessageCounters&
  counters() noexcept
  {
    return m_counters;
  }

  const MessageCounters&
  counters() const noexcept
  {
    return m_counters;
  }

  /// Logs one end-to-end message and credits src/relayer/dst counters.
  void
  recordMessage(NodeId src, NodeId dst, std::optional<NodeId> relayer, MsgType type,
                const Name& name);

  /// Two-message handshake (request + acknowledgment) with the NSCL.
  void
  registerScl(NodeId scl, NodeId nscl);

  void
  createApplication(NodeId scl, std::string_view app);

  void
  createContainer(NodeId scl, std::string_view app, std::string_view container);

  /// Appends an instance and notifies every active subscription on the container.
  std::uint64_t
  createContentInstance(NodeId scl, std::string_view app, std::string_view container,
                        std::string payload);

  std::string
  readResource(NodeId scl, const Name& name) const;

  /// NSCL-mediated discovery: the NSCL answers which SCL owns the name, then
  /// a second query, relayed by the NSCL, asks that SCL for the resource.
  DiscoveryResult
  centralizedDiscover(NodeId origin, NodeId nscl, const Name& query);

  /// Subscription request relayed by the NSCL; later notifications follow
  /// the same route.
  Subscription
  subscribeCentralized(NodeId origin, NodeId nscl, const Name& target);

  /// Records a subscription on the container `target` names. Used by the
  /// overlay layer for peer-to-peer subscriptions.
  Subscription&
  installSubscription(NodeId owner, Subscription subscription);

  /// Active subscriptions recorded on the container `target` names at `owner`.
  std::vector<Subscription>&
  subscriptionsOn(NodeId owner, const Name& target);

  void
  setP2pPublisher(P2pPublisher publisher)
  {
    m_publisher = std::move(publisher);
  }

private:
  void
  requireNscl(NodeId nscl) const;

  void
  requireRegistered(NodeId origin) const;

  std::deque<SclInstance> m_instances;
  std::optional<NodeId> m_nscl;
  sim::Scheduler m_scheduler;
  MessageLog m_log;
  MessageCounters m_counters;
  P2pPublisher m_publisher;
  std::uint64_t m_nextSubscriptionId = 1;
};

} // namespace oscl::scl

#endif // OSCL_SCL_M2M_SYSTEM_HPP
