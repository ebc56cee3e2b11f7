// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/overlay/oscl.hpp"

#include "oscl/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace oscl::overlay {

using scl::MsgType;
using scl::Role;

std::string_view
toString(LinkDecision decision) noexcept
{
  return decision == LinkDecision::NewLink ? "new-link" : "reused-path";
}

namespace {

std::string
discoveryRecord(const Name& uri, const scl::Locator& locator)
{
  std::ostringstream os;
  os << "uri=" << uri.toUri() << ";node=" << locator.node.value() << ";host=" << locator.host
     << ";port=" << locator.port;
  return os.str();
}

/// Inverse of discoveryRecord(); nullopt for any other payload.
std::optional<std::pair<Name, scl::Locator>>
parseDiscoveryRecord(std::string_view payload)
{
  std::map<std::string_view, std::string_view> fields;
  while (!payload.empty()) {
    auto end = payload.find(';');
    auto item = payload.substr(0, end);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      return std::nullopt;
    }
    fields[item.substr(0, eq)] = item.substr(eq + 1);
    payload = end == std::string_view::npos ? std::string_view{} : payload.substr(end + 1);
  }
  if (fields.size() != 4 || !fields.count("uri") || !fields.count("node") ||
      !fields.count("host") || !fields.count("port")) {
    return std::nullopt;
  }
  auto toUint = [] (std::string_view s, auto& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  std::uint32_t node = 0;
  std::uint16_t port = 0;
  if (!toUint(fields["node"], node) || !toUint(fields["port"], port)) {
    return std::nullopt;
  }
  return std::pair{Name::parse(fields["uri"]),
                   scl::Locator{NodeId{node}, std::string(fields["host"]), port}};
}

sim::Duration
linkDelay(const LinkMetrics& metrics)
{
  return sim::Duration{static_cast<sim::Duration::rep>(std::llround(metrics.delayMs))};
}

} // namespace

Oscl::Oscl(scl::M2mSystem& system, OsclConfig config)
  : m_system(system)
  , m_config(config)
  , m_rng(config.seed)
{
  m_system.setP2pPublisher([this] (NodeId owner, const Name& container,
                                   const scl::ContentInstance& instance) {
    publish(owner, container, instance);
  });
}

Oscl::~Oscl()
{
  *m_alive = false;
  m_system.setP2pPublisher({});
}

ndn::Node&
Oscl::forwarder(NodeId node)
{
  return m_system.scl(node).forwarder();
}

void
Oscl::requireAttached(NodeId node) const
{
  if (!m_graph.hasVertex(node)) {
    std::ostringstream msg;
    msg << "node " << node << " is not attached to the overlay";
    throw Error(Errc::UnknownNode, msg.str());
  }
}

void
Oscl::post(sim::Duration delay, std::function<void()> fn)
{
  m_system.scheduler().scheduleAfter(delay, [alive = m_alive, fn = std::move(fn)] {
    if (*alive) {
      fn();
    }
  });
}

void
Oscl::attach(NodeId node)
{
  auto& fwd = forwarder(node);
  m_graph.addVertex(node);
  fwd.setStrategy(m_config.strategy);
}

void
Oscl::attachAll()
{
  for (std::uint32_t i = 0; i < m_system.size(); ++i) {
    NodeId id{i};
    if (m_system.scl(id).kind() != scl::SclKind::Nscl) {
      attach(id);
    }
  }
}

bool
Oscl::connect(NodeId a, NodeId b, std::optional<LinkMetrics> metrics)
{
  requireAttached(a);
  requireAttached(b);
  if (a == b) {
    throw Error(Errc::InvalidArgument, "an overlay link needs two distinct nodes");
  }
  if (m_graph.hasEdge(a, b)) {
    return false;
  }
  auto faceA = forwarder(a).addFace(ndn::FaceScope::NonLocal);
  auto faceB = forwarder(b).addFace(ndn::FaceScope::NonLocal);
  return m_graph.addEdge(a, b, faceA, faceB, metrics.value_or(m_config.defaultLink));
}

void
Oscl::addRoute(NodeId at, const Name& prefix, NodeId via)
{
  auto face = m_graph.faceTowards(at, via);
  if (!face) {
    std::ostringstream msg;
    msg << "no overlay link between " << at << " and " << via;
    throw Error(Errc::NoPath, msg.str());
  }
  forwarder(at).registerPrefix(prefix, *face);
}

ndn::Interest
Oscl::makeInterest(const Name& name, std::uint32_t hopLimit, std::uint32_t solicit)
{
  ndn::Interest interest{name, m_rng.next(), hopLimit};
  interest.solicitCount = solicit;
  interest.lifetime = m_config.interestLifetime;
  return interest;
}

std::uint64_t
Oscl::express(NodeId origin, ndn::Interest interest, DataCallback onData)
{
  requireAttached(origin);
  const auto handle = m_nextHandle++;
  m_pending.emplace(handle, Pending{origin, interest.name, std::move(onData)});
  post(sim::Duration::zero(), [this, origin, interest = std::move(interest)] {
    onInterest(origin, scl::kConsumerFace, interest, {origin});
  });
  return handle;
}

void
Oscl::cancel(std::uint64_t handle)
{
  m_pending.erase(handle);
}

void
Oscl::onInterest(NodeId at, FaceId inFace, const ndn::Interest& interest, const Trail& trail)
{
  auto& fwd = forwarder(at);
  const auto now = m_system.now();
  fwd.expirePit(now);
  m_trace.recordArrival(now, at, interest, inFace);
  auto out = fwd.onInterest(interest, inFace, now);
  m_trace.recordEmissions(now, at, ndn::PacketKind::Interest, interest.name, interest.nonce, out);
  account(at, MsgType::Interest, fwd.faceScope(inFace) == ndn::FaceScope::Local, out);
  dispatch(at, MsgType::Interest, out, trail);
}

void
Oscl::onData(NodeId at, FaceId inFace, const ndn::Data& data, const Trail& trail)
{
  auto& fwd = forwarder(at);
  const auto now = m_system.now();
  fwd.expirePit(now);
  m_trace.recordArrival(now, at, data, inFace);
  auto out = fwd.onData(data, inFace, now);
  m_trace.recordEmissions(now, at, ndn::PacketKind::Data, data.name, std::nullopt, out);
  account(at, MsgType::Data, fwd.faceScope(inFace) == ndn::FaceScope::Local, out);
  dispatch(at, MsgType::Data, out, trail);
}

void
Oscl::account(NodeId at, MsgType type, bool local, std::span<const ndn::Emission> out)
{
  auto& counters = m_system.counters();
  const auto& fwd = forwarder(at);
  std::uint64_t onward = 0;
  std::uint64_t delivered = 0;
  bool served = false;
  for (const auto& e : out) {
    std::optional<FaceId> face;
    bool sameType = false;
    if (const auto* si = std::get_if<ndn::SendInterest>(&e)) {
      face = si->face;
      sameType = type == MsgType::Interest;
    }
    else if (const auto* sd = std::get_if<ndn::SendData>(&e)) {
      face = sd->face;
      sameType = type == MsgType::Data;
    }
    if (!face) {
      continue;
    }
    const bool toApp = fwd.faceScope(*face) == ndn::FaceScope::Local;
    if (sameType) {
      ++(toApp ? delivered : onward);
    }
    else {
      // Content Store hit: the Interest ends here and a new Data starts.
      served = true;
      counters.add(at, MsgType::Data, Role::Originated);
      if (toApp) {
        counters.add(at, MsgType::Data, Role::Received);
      }
    }
  }

  if (local) {
    counters.add(at, type, Role::Originated);
  }
  const auto copies = onward + delivered;
  if (copies == 0) {
    counters.add(at, type, served ? Role::Received : Role::Dropped);
    return;
  }
  if (copies > 1) {
    counters.add(at, type, Role::Originated, copies - 1);
  }
  if (delivered > 0) {
    counters.add(at, type, Role::Received, delivered);
  }
  else if (!local) {
    counters.add(at, type, Role::Relayed);
  }
}

void
Oscl::dispatch(NodeId at, MsgType trigger, std::span<const ndn::Emission> out,
               const Trail& trail)
{
  for (const auto& e : out) {
    if (const auto* si = std::get_if<ndn::SendInterest>(&e)) {
      if (si->face == scl::kProducerFace) {
        produce(at, si->interest, trail);
      }
      else {
        transmit(at, si->face, si->interest, trail);
      }
    }
    else if (const auto* sd = std::get_if<ndn::SendData>(&e)) {
      // Data answering an Interest from the cache starts a new trail here.
      const Trail fresh{at};
      const Trail& dataTrail = trigger == MsgType::Interest ? fresh : trail;
      if (sd->face == scl::kConsumerFace) {
        deliverToConsumer(at, sd->data, dataTrail);
      }
      else {
        transmit(at, sd->face, sd->data, dataTrail);
      }
    }
  }
}

void
Oscl::transmit(NodeId from, FaceId face, std::variant<ndn::Interest, ndn::Data> packet,
               const Trail& trail)
{
  const bool isInterest = std::holds_alternative<ndn::Interest>(packet);
  const auto type = isInterest ? MsgType::Interest : MsgType::Data;
  const Name& name = isInterest ? std::get<ndn::Interest>(packet).name
                                : std::get<ndn::Data>(packet).name;
  auto hop = m_graph.traverse(from, face);
  if (!hop) {
    m_system.counters().add(from, type, Role::Dropped);
    return;
  }
  m_system.log().append({m_system.now(), from, hop->neighbor, std::nullopt, type, name});
  if (m_rng.bernoulli(hop->metrics->loss)) {
    m_system.counters().add(from, type, Role::Dropped);
    return;
  }
  Trail next = trail;
  next.push_back(hop->neighbor);
  post(linkDelay(*hop->metrics),
       [this, to = hop->neighbor, inFace = hop->neighborFace, packet = std::move(packet),
        next = std::move(next)] {
         if (const auto* interest = std::get_if<ndn::Interest>(&packet)) {
           onInterest(to, inFace, *interest, next);
         }
         else {
           onData(to, inFace, std::get<ndn::Data>(packet), next);
         }
       });
}

void
Oscl::produce(NodeId at, const ndn::Interest& interest, const Trail& trail)
{
  auto& owner = m_system.scl(at);
  const NodeId origin = trail.front();

  if (interest.subscription) {
    std::vector<scl::Subscription>* subs = nullptr;
    try {
      subs = &m_system.subscriptionsOn(at, interest.name);
    }
    catch (const Error&) {
      return; // not a container: nothing will ever be published
    }
    const bool known = std::any_of(subs->begin(), subs->end(), [origin] (const auto& s) {
      return s.active && s.mode == scl::SubscriptionMode::P2p && s.subscriber.node == origin;
    });
    if (!known) {
      m_system.installSubscription(at, scl::Subscription{0, m_system.scl(origin).locator(),
                                                         interest.name,
                                                         scl::SubscriptionMode::P2p, trail, true});
    }
    m_reached[{origin, interest.name}] = trail;
    return;
  }

  std::string payload;
  try {
    auto ref = owner.tree().resolve(interest.name);
    payload = ref.kind == scl::ResourceKind::ContentInstance
                ? owner.tree().read(interest.name)
                : discoveryRecord(interest.name, owner.locator());
  }
  catch (const Error&) {
    return; // unanswerable: the Interest times out downstream
  }
  ndn::Data data{interest.name, std::move(payload), m_config.dataFreshness, at};
  post(sim::Duration::zero(), [this, at, data = std::move(data)] {
    onData(at, scl::kProducerFace, data, {at});
  });
}

void
Oscl::publish(NodeId owner, const Name& container, const scl::ContentInstance& instance)
{
  if (!m_graph.hasVertex(owner)) {
    return;
  }
  ndn::Data data{container, instance.payload, m_config.dataFreshness, owner};
  onData(owner, scl::kProducerFace, data, {owner});
}

void
Oscl::deliverToConsumer(NodeId at, const ndn::Data& data, const Trail& trail)
{
  Trail path(trail.rbegin(), trail.rend());
  std::vector<std::uint64_t> handles;
  for (const auto& [handle, p] : m_pending) {
    if (p.origin == at && p.name == data.name) {
      handles.push_back(handle);
    }
  }
  for (auto handle : handles) {
    auto it = m_pending.find(handle);
    if (it == m_pending.end()) {
      continue;
    }
    auto callback = it->second.callback;
    callback(data, path);
  }
}

std::optional<scl::DiscoveryResult>
Oscl::distributedDiscover(NodeId origin, const Name& target, std::uint32_t scope)
{
  requireAttached(origin);
  if (scope < 1) {
    throw Error(Errc::InvalidArgument, "discovery scope must be at least 1 hop");
  }
  auto interest = makeInterest(target, scope);
  interest.bypassCache = true;
  const auto deadline = m_system.now() + interest.lifetime;

  std::optional<scl::DiscoveryResult> result;
  auto handle = express(origin, std::move(interest),
                        [this, &result] (const ndn::Data& data, const std::vector<NodeId>& path) {
    if (result) {
      return;
    }
    scl::DiscoveryResult r{data.name, m_system.scl(data.producer).locator(), path,
                           scl::DiscoveryMethod::Distributed};
    if (auto record = parseDiscoveryRecord(data.payload)) {
      r.uri = record->first;
      r.locator = record->second;
    }
    result = std::move(r);
  });
  m_system.scheduler().runUntil(deadline, [&result] { return result.has_value(); });
  cancel(handle);
  return result;
}

scl::DiscoveryResult
Oscl::discover(NodeId origin, const Name& target, std::uint32_t scope, NodeId nscl)
{
  if (auto result = distributedDiscover(origin, target, scope)) {
    return *result;
  }
  return m_system.centralizedDiscover(origin, nscl, target);
}

QosMetrics
Oscl::monitorPath(std::span<const NodeId> path, std::uint64_t probes)
{
  auto metrics = measurePath(m_graph, path, probes, m_rng);
  m_system.log().append({m_system.now(), path.front(), path.back(), std::nullopt, MsgType::Probe,
                         m_system.scl(path.back()).baseName()});
  return metrics;
}

LinkDecision
Oscl::ensureLink(NodeId origin, const scl::DiscoveryResult& target, const QosPolicy& policy,
                 const std::optional<QosMetrics>& metrics)
{
  policy.validate();
  requireAttached(origin);
  const NodeId peer = target.locator.node;
  if (peer == origin || m_graph.hasEdge(origin, peer)) {
    return LinkDecision::ReusedPath;
  }
  const bool poor = target.method == scl::DiscoveryMethod::Centralized || !target.path ||
                    !policy.acceptsPathLength(*target.hopCount()) ||
                    (metrics && !policy.accepts(*metrics));
  if (!poor) {
    return LinkDecision::ReusedPath;
  }
  requireAttached(peer);
  connect(origin, peer);
  addRoute(origin, m_system.scl(peer).baseName(), peer);
  addRoute(peer, m_system.scl(origin).baseName(), origin);
  m_system.log().append({m_system.now(), origin, peer, std::nullopt, MsgType::LinkUp, target.uri});
  return LinkDecision::NewLink;
}

scl::Subscription
Oscl::subscribe(NodeId origin, const Name& target, std::uint32_t expected, std::uint32_t scope)
{
  requireAttached(origin);
  if (expected < 1 || scope < 1) {
    throw Error(Errc::InvalidArgument, "a subscription needs expected >= 1 and scope >= 1");
  }
  auto owner = m_system.owner(target);
  if (!owner || !forwarder(origin).fib().findLongestPrefixMatch(target)) {
    throw Error(Errc::NoPath, "no overlay route towards '" + target.toUri() + "'");
  }

  const std::pair key{origin, target};
  m_reached.erase(key);
  auto interest = makeInterest(target, scope, expected);
  interest.subscription = true;
  const auto deadline = m_system.now() + interest.lifetime;
  auto slot = std::make_shared<std::uint64_t>(0);
  const auto handle = express(origin, std::move(interest),
                              [this, slot] (const ndn::Data&, const std::vector<NodeId>&) {
    auto it = m_subscribers.find(*slot);
    if (it == m_subscribers.end() || !it->second.active) {
      return;
    }
    auto& sub = it->second;
    if (++sub.delivered >= sub.expected) {
      finish(sub);
    }
  });
  *slot = handle;

  m_system.scheduler().runUntil(deadline, [this, &key] { return m_reached.count(key) != 0; });
  if (!m_reached.count(key)) {
    cancel(handle);
    throw Error(Errc::NoPath, "subscription Interest did not reach '" + target.toUri() + "'");
  }

  const auto& subs = m_system.subscriptionsOn(*owner, target);
  auto record = std::find_if(subs.rbegin(), subs.rend(), [origin] (const auto& s) {
    return s.active && s.mode == scl::SubscriptionMode::P2p && s.subscriber.node == origin;
  });
  m_subscribers.emplace(handle, Subscriber{origin, *owner, target, expected, scope, record->id,
                                           0, handle, true});
  post(m_config.interestLifetime / 2, [this, handle] { refresh(handle); });
  return *record;
}

void
Oscl::refresh(std::uint64_t key)
{
  auto it = m_subscribers.find(key);
  if (it == m_subscribers.end() || !it->second.active) {
    return;
  }
  const auto& sub = it->second;
  auto interest = makeInterest(sub.target, sub.scope,
                               static_cast<std::uint32_t>(sub.expected - sub.delivered));
  interest.subscription = true;
  onInterest(sub.origin, scl::kConsumerFace, interest, {sub.origin});
  post(m_config.interestLifetime / 2, [this, key] { refresh(key); });
}

void
Oscl::finish(Subscriber& sub)
{
  sub.active = false;
  cancel(sub.handle);
  for (auto& s : m_system.subscriptionsOn(sub.owner, sub.target)) {
    if (s.id == sub.subscriptionId) {
      s.active = false;
    }
  }
}

std::uint64_t
Oscl::delivered(std::uint64_t subscriptionId) const
{
  for (const auto& [handle, sub] : m_subscribers) {
    if (sub.subscriptionId == subscriptionId) {
      return sub.delivered;
    }
  }
  throw Error(Errc::NotFound, "unknown subscription id " + std::to_string(subscriptionId));
}

std::optional<ndn::Data>
Oscl::read(NodeId origin, const Name& name, std::uint32_t scope)
{
  auto interest = makeInterest(name, scope);
  const auto deadline = m_system.now() + interest.lifetime;
  std::optional<ndn::Data> result;
  auto handle = express(origin, std::move(interest),
                        [&result] (const ndn::Data& data, const std::vector<NodeId>&) {
    if (!result) {
      result = data;
    }
  });
  m_system.scheduler().runUntil(deadline, [&result] { return result.has_value(); });
  cancel(handle);
  return result;
}

} // namespace oscl::overlay
