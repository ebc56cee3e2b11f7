// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_OVERLAY_OSCL_HPP
#define OSCL_OVERLAY_OSCL_HPP

#include "oscl/ndn/trace.hpp"
#include "oscl/overlay/overlay_graph.hpp"
#include "oscl/overlay/qos.hpp"
#include "oscl/scl/m2m_system.hpp"
#include "oscl/sim/random.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace oscl::overlay {

struct OsclConfig
{
  std::uint64_t seed = 1;
  LinkMetrics defaultLink{};
  sim::Duration interestLifetime = ndn::kDefaultInterestLifetime;
  sim::Duration dataFreshness{10000};
  /// Strategy installed on every attached node.
  ndn::Strategy strategy = ndn::Strategy::Multicast;
};

enum class LinkDecision {
  ReusedPath,
  NewLink,
};

std::string_view
toString(LinkDecision decision) noexcept;

/**
 * The overlay service capability layer on top of an M2mSystem: a graph of
 * named-data links between SCL instances, packet transport over the shared
 * simulated clock, discovery with centralized fallback, link policy and
 * peer-to-peer subscriptions.
 *
 * Packets are counted per arrival so that, summed over all nodes and types,
 * originated == received + dropped once the network is quiescent.
 */
class Oscl
{
public:
  /// Data handed to a consumer face, with the overlay nodes between the
  /// consumer (front) and the node that answered (back).
  using DataCallback = std::function<void(const ndn::Data&, const std::vector<NodeId>& path)>;

  explicit
  Oscl(scl::M2mSystem& system, OsclConfig config = {});

  ~Oscl();

  Oscl(const Oscl&) = delete;
  Oscl&
  operator=(const Oscl&) = delete;

  /// Adds an SCL instance to the overlay. Idempotent.
  void
  attach(NodeId node);

  /// Attaches every SCL instance except the NSCL.
  void
  attachAll();

  bool
  attached(NodeId node) const noexcept
  {
    return m_graph.hasVertex(node);
  }

  /// Creates a link with fresh faces on both ends. Returns false if the link
  /// already exists. Throws UnknownNode if an endpoint is not attached.
  bool
  connect(NodeId a, NodeId b, std::optional<LinkMetrics> metrics = std::nullopt);

  /// Routes `prefix` at node `at` over its link to `via`. Throws NoPath if
  /// the two are not linked.
  void
  addRoute(NodeId at, const Name& prefix, NodeId via);

  ndn::Interest
  makeInterest(const Name& name, std::uint32_t hopLimit, std::uint32_t solicit = 1);

  /// Injects `interest` on the consumer face of `origin` at the current time.
  /// Returns a handle for cancel().
  std::uint64_t
  express(NodeId origin, ndn::Interest interest, DataCallback onData);

  void
  cancel(std::uint64_t handle);

  /// Interest-based lookup limited to `scope` overlay hops. Runs the clock
  /// until an answer arrives or the Interest lifetime elapses.
  std::optional<scl::DiscoveryResult>
  distributedDiscover(NodeId origin, const Name& target, std::uint32_t scope);

  /// Distributed discovery, falling back to the NSCL. Throws NotFound if
  /// both fail.
  scl::DiscoveryResult
  discover(NodeId origin, const Name& target, std::uint32_t scope, NodeId nscl);

  /// Probes `path` and logs the measurement. Probes are not counted.
  QosMetrics
  monitorPath(std::span<const NodeId> path, std::uint64_t probes);

  /// Adds a direct link origin<->target (with routes for both base names)
  /// when the discovery was centralized or the path or its metrics violate
  /// `policy`.
  LinkDecision
  ensureLink(NodeId origin, const scl::DiscoveryResult& target, const QosPolicy& policy,
             const std::optional<QosMetrics>& metrics = std::nullopt);

  /**
   * Installs a peer-to-peer subscription on container `target`, carried by a
   * long-lived Interest soliciting `expected` Data packets. The Interest is
   * refreshed every half lifetime until `expected` notifications arrived.
   * Throws NoPath if the Interest cannot reach the owner.
   */
  scl::Subscription
  subscribe(NodeId origin, const Name& target, std::uint32_t expected, std::uint32_t scope);

  /// Plain Interest/Data retrieval; may be answered from a Content Store.
  std::optional<ndn::Data>
  read(NodeId origin, const Name& name, std::uint32_t scope);

  std::optional<std::uint32_t>
  pathLength(NodeId u, NodeId v, std::uint32_t bound) const
  {
    return m_graph.pathLength(u, v, bound);
  }

  /// Notifications delivered so far for a subscription returned by subscribe().
  std::uint64_t
  delivered(std::uint64_t subscriptionId) const;

  const OverlayGraph&
  graph() const noexcept
  {
    return m_graph;
  }

  const ndn::EmissionTrace&
  trace() const noexcept
  {
    return m_trace;
  }

  const OsclConfig&
  config() const noexcept
  {
    return m_config;
  }

private:
  using Trail = std::vector<NodeId>;

  struct Pending
  {
    NodeId origin;
    Name name;
    DataCallback callback;
  };

  struct Subscriber
  {
    NodeId origin;
    NodeId owner;
    Name target;
    std::uint32_t expected;
    std::uint32_t scope;
    std::uint64_t subscriptionId = 0;
    std::uint64_t delivered = 0;
    std::uint64_t handle = 0;
    bool active = true;
  };

  ndn::Node&
  forwarder(NodeId node);

  void
  requireAttached(NodeId node) const;

  void
  post(sim::Duration delay, std::function<void()> fn);

  void
  onInterest(NodeId at, FaceId inFace, const ndn::Interest& interest, const Trail& trail);

  void
  onData(NodeId at, FaceId inFace, const ndn::Data& data, const Trail& trail);

  void
  account(NodeId at, scl::MsgType type, bool local, std::span<const ndn::Emission> out);

  void
  dispatch(NodeId at, scl::MsgType trigger, std::span<const ndn::Emission> out,
           const Trail& trail);

  void
  transmit(NodeId from, FaceId face, std::variant<ndn::Interest, ndn::Data> packet,
           const Trail& trail);

  void
  produce(NodeId at, const ndn::Interest& interest, const Trail& trail);

  void
  deliverToConsumer(NodeId at, const ndn::Data& data, const Trail& trail);

  void
  publish(NodeId owner, const Name& container, const scl::ContentInstance& instance);

  void
  refresh(std::uint64_t key);

  void
  finish(Subscriber& sub);

  scl::M2mSystem& m_system;
  OsclConfig m_config;
  OverlayGraph m_graph;
  sim::Rng m_rng;
  ndn::EmissionTrace m_trace;
  std::map<std::uint64_t, Pending> m_pending;
  std::uint64_t m_nextHandle = 1;
  /// Keyed by the handle of the subscription's pending Interest.
  std::map<std::uint64_t, Subscriber> m_subscribers;
  /// (subscriber, container) -> Interest trail that reached the owner.
  std::map<std::pair<NodeId, Name>, Trail> m_reached;
  std::shared_ptr<bool> m_alive = std::make_shared<bool>(true);
};

} // namespace oscl::overlay

#endif // OSCL_OVERLAY_OSCL_HPP
