// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/scl/m2m_system.hpp"

#include "oscl/error.hpp"

#include <sstream>

namespace oscl::scl {

std::string_view
toString(DiscoveryMethod method) noexcept
{
  return method == DiscoveryMethod::Distributed ? "distributed" : "centralized";
}

namespace {

Locator
defaultLocator(NodeId id)
{
  const auto n = id.value() + 1;
  std::ostringstream host;
  host << "10." << ((n >> 16) & 0xff) << '.' << ((n >> 8) & 0xff) << '.' << (n & 0xff);
  return Locator{id, host.str(), 5683};
}

} // namespace

NodeId
M2mSystem::addScl(SclKind kind, std::string_view baseName, ndn::NodeConfig forwarding)
{
  NodeId id{static_cast<std::uint32_t>(m_instances.size())};
  return addScl(kind, baseName, defaultLocator(id), forwarding);
}

NodeId
M2mSystem::addScl(SclKind kind, std::string_view baseName, Locator locator,
                  ndn::NodeConfig forwarding)
{
  NodeId id{static_cast<std::uint32_t>(m_instances.size())};
  auto base = Name::parse(baseName);
  if (findByBaseName(base)) {
    throw Error(Errc::DuplicateName, "an SCL named '" + base.toUri() + "' already exists");
  }
  if (kind == SclKind::Nscl && m_nscl) {
    throw Error(Errc::InvalidArgument, "a system holds exactly one NSCL");
  }
  locator.node = id;
  m_instances.emplace_back(id, kind, std::move(base), std::move(locator), forwarding);
  if (kind == SclKind::Nscl) {
    m_nscl = id;
  }
  return id;
}

SclInstance&
M2mSystem::scl(NodeId id)
{
  return const_cast<SclInstance&>(std::as_const(*this).scl(id));
}

const SclInstance&
M2mSystem::scl(NodeId id) const
{
  if (!contains(id)) {
    std::ostringstream msg;
    msg << "no SCL instance with id " << id;
    throw Error(Errc::UnknownNode, msg.str());
  }
  return m_instances[id.value()];
}

NodeId
M2mSystem::nscl() const
{
  if (!m_nscl) {
    throw Error(Errc::NotFound, "system has no NSCL");
  }
  return *m_nscl;
}

std::optional<NodeId>
M2mSystem::findByBaseName(const Name& baseName) const
{
  for (const auto& s : m_instances) {
    if (s.baseName() == baseName) {
      return s.id();
    }
  }
  return std::nullopt;
}

std::optional<NodeId>
M2mSystem::owner(const Name& name) const
{
  std::optional<NodeId> best;
  std::size_t bestLength = 0;
  for (const auto& s : m_instances) {
    if (s.owns(name) && s.baseName().size() > bestLength) {
      best = s.id();
      bestLength = s.baseName().size();
    }
  }
  return best;
}

std::string
M2mSystem::label(NodeId id) const
{
  if (!contains(id)) {
    return std::to_string(id.value());
  }
  return scl(id).baseName().toUri();
}

void
M2mSystem::recordMessage(NodeId src, NodeId dst, std::optional<NodeId> relayer, MsgType type,
                         const Name& name)
{
  m_log.append({now(), src, dst, relayer, type, name});
  m_counters.add(src, type, Role::Originated);
  if (relayer) {
    m_counters.add(*relayer, type, Role::Relayed);
  }
  m_counters.add(dst, type, Role::Received);
}

void
M2mSystem::requireNscl(NodeId nscl) const
{
  if (scl(nscl).kind() != SclKind::Nscl) {
    throw Error(Errc::NotAnNscl, label(nscl) + " is not the NSCL");
  }
}

void
M2mSystem::requireRegistered(NodeId origin) const
{
  const auto& s = scl(origin);
  if (s.kind() != SclKind::Nscl && !s.registered()) {
    throw Error(Errc::NotRegistered, label(origin) + " has not registered with the NSCL");
  }
}

void
M2mSystem::registerScl(NodeId sclId, NodeId nsclId)
{
  requireNscl(nsclId);
  auto& s = scl(sclId);
  if (s.kind() == SclKind::Nscl) {
    throw Error(Errc::InvalidArgument, "the NSCL does not register with itself");
  }
  if (s.registered()) {
    throw Error(Errc::AlreadyRegistered, label(sclId) + " is already registered");
  }
  recordMessage(sclId, nsclId, std::nullopt, MsgType::Register, s.baseName());
  scl(nsclId).m_registry.insert_or_assign(s.baseName(), s.locator());
  recordMessage(nsclId, sclId, std::nullopt, MsgType::Register, s.baseName());
  s.m_registered = true;
}

void
M2mSystem::createApplication(NodeId sclId, std::string_view app)
{
  scl(sclId).tree().createApplication(app);
}

void
M2mSystem::createContainer(NodeId sclId, std::string_view app, std::string_view container)
{
  scl(sclId).tree().createContainer(app, container);
}

std::uint64_t
M2mSystem::createContentInstance(NodeId sclId, std::string_view app, std::string_view container,
                                 std::string payload)
{
  auto& owner = scl(sclId);
  auto& c = owner.tree().container(app, container);
  const auto& instance = c.append(std::move(payload), now());
  const auto target = owner.tree().containerName(app, container);

  bool p2p = false;
  for (const auto& sub : c.subscriptions()) {
    if (!sub.active) {
      continue;
    }
    if (sub.mode == SubscriptionMode::Centralized) {
      recordMessage(sclId, sub.subscriber.node, nscl(), MsgType::Notify, target);
    }
    else {
      p2p = true;
    }
  }
  if (p2p && m_publisher) {
    m_publisher(sclId, target, instance);
  }
  return instance.index;
}

std::string
M2mSystem::readResource(NodeId sclId, const Name& name) const
{
  return scl(sclId).tree().read(name);
}

DiscoveryResult
M2mSystem::centralizedDiscover(NodeId origin, NodeId nsclId, const Name& query)
{
  requireNscl(nsclId);
  requireRegistered(origin);

  // First exchange: which registered SCL is responsible for the name.
  const auto& registry = scl(nsclId).registry();
  recordMessage(origin, nsclId, std::nullopt, MsgType::DiscoverQuery, query);
  std::optional<Locator> ownerLocator;
  std::size_t bestLength = 0;
  for (const auto& [base, locator] : registry) {
    if (base.isPrefixOf(query) && base.size() > bestLength) {
      ownerLocator = locator;
      bestLength = base.size();
    }
  }
  recordMessage(nsclId, origin, std::nullopt, MsgType::DiscoverResponse, query);
  if (!ownerLocator) {
    throw Error(Errc::NotFound, "no registered SCL owns '" + query.toUri() + "'");
  }

  // Second exchange: the owner resolves the name, both legs relayed by the NSCL.
  const NodeId ownerId = ownerLocator->node;
  recordMessage(origin, ownerId, nsclId, MsgType::DiscoverQuery, query);
  bool found = true;
  try {
    scl(ownerId).tree().resolve(query);
  }
  catch (const Error& e) {
    // an empty container still exists
    found = e.code() == Errc::EmptyContainer;
  }
  recordMessage(ownerId, origin, nsclId, MsgType::DiscoverResponse, query);
  if (!found) {
    throw Error(Errc::NotFound, label(ownerId) + " holds no resource '" + query.toUri() + "'");
  }
  return DiscoveryResult{query, *ownerLocator, std::nullopt, DiscoveryMethod::Centralized};
}

Subscription
M2mSystem::subscribeCentralized(NodeId origin, NodeId nsclId, const Name& target)
{
  requireNscl(nsclId);
  requireRegistered(origin);
  auto ownerId = owner(target);
  if (!ownerId || !scl(*ownerId).registered()) {
    throw Error(Errc::NotFound, "no registered SCL owns '" + target.toUri() + "'");
  }
  auto ref = scl(*ownerId).tree().resolve(target);
  if (ref.kind != ResourceKind::Container) {
    throw Error(Errc::NotFound, "'" + target.toUri() + "' is not a container");
  }
  recordMessage(origin, *ownerId, nsclId, MsgType::Subscribe, target);
  Subscription sub{0, scl(origin).locator(), target, SubscriptionMode::Centralized, std::nullopt, true};
  return installSubscription(*ownerId, std::move(sub));
}

std::vector<Subscription>&
M2mSystem::subscriptionsOn(NodeId ownerId, const Name& target)
{
  auto& tree = scl(ownerId).tree();
  ResourceRef ref;
  try {
    ref = tree.resolve(target);
  }
  catch (const Error& e) {
    throw Error(Errc::NotFound, e.what());
  }
  if (ref.kind != ResourceKind::Container) {
    throw Error(Errc::NotFound, "'" + target.toUri() + "' is not a container");
  }
  return tree.container(ref.application, ref.container).subscriptions();
}

Subscription&
M2mSystem::installSubscription(NodeId ownerId, Subscription subscription)
{
  if ((subscription.mode == SubscriptionMode::P2p) != subscription.deliveryPath.has_value()) {
    throw Error(Errc::InvalidArgument, "a delivery path is required exactly for p2p subscriptions");
  }
  auto& subs = subscriptionsOn(ownerId, subscription.target);
  subscription.id = m_nextSubscriptionId++;
  subs.push_back(std::move(subscription));
  return subs.back();
}

} // namespace oscl::scl
