// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/ndn/node.hpp"

#include "oscl/error.hpp"

#include <sstream>

namespace oscl::ndn {

std::string_view
toString(DropReason reason) noexcept
{
  switch (reason) {
    case DropReason::Loop: return "loop";
    case DropReason::NoRoute: return "no-route";
    case DropReason::Unsolicited: return "unsolicited";
  }
  return "unknown";
}

Node::Node(NodeId id, NodeConfig config)
  : m_id(id)
  , m_config(config)
  , m_cs(config.csCapacity)
{
}

FaceId
Node::addFace(FaceScope scope)
{
  FaceId face{m_nextFace++};
  m_faces.emplace(face, scope);
  return face;
}

FaceScope
Node::faceScope(FaceId face) const
{
  requireFace(face);
  return m_faces.at(face);
}

void
Node::requireFace(FaceId face) const
{
  if (!hasFace(face)) {
    std::ostringstream msg;
    msg << "face " << face << " is not attached to node " << m_id;
    throw Error(Errc::UnknownFace, msg.str());
  }
}

void
Node::registerPrefix(const Name& prefix, FaceId face)
{
  requireFace(face);
  m_fib.addNextHop(prefix, face);
}

Strategy
Node::strategyFor(const Name& name) const
{
  if (auto match = m_strategyChoice.longestPrefixMatch(name)) {
    return match->value;
  }
  return m_config.strategy;
}

bool
Node::hasSeenNonce(const Name& name, std::uint64_t nonce) const
{
  return m_nonces.count(NonceKey{name, nonce}) != 0;
}

void
Node::rememberNonce(const Name& name, std::uint64_t nonce)
{
  if (m_config.nonceCapacity == 0) {
    return;
  }
  if (m_nonceOrder.size() >= m_config.nonceCapacity) {
    m_nonces.erase(m_nonceOrder.front());
    m_nonceOrder.pop_front();
  }
  m_nonceOrder.push_back(NonceKey{name, nonce});
  m_nonces.insert(m_nonceOrder.back());
}

std::vector<Emission>
Node::forward(const Interest& interest, FaceId inFace)
{
  std::vector<Emission> out;
  auto match = m_fib.findLongestPrefixMatch(interest.name);
  if (!match) {
    return out;
  }
  const bool onlyFirst = strategyFor(interest.name) == Strategy::BestRoute;
  for (FaceId face : match->value.nextHops) {
    if (face == inFace || !hasFace(face)) {
      continue;
    }
    Interest copy = interest;
    if (m_faces.at(face) == FaceScope::NonLocal) {
      if (interest.hopLimit == 0) {
        continue;
      }
      copy.hopLimit = interest.hopLimit - 1;
    }
    out.emplace_back(SendInterest{face, std::move(copy)});
    if (onlyFirst) {
      break;
    }
  }
  return out;
}

std::vector<Emission>
Node::onInterest(const Interest& interest, FaceId inFace, sim::Time now)
{
  requireFace(inFace);
  if (interest.solicitCount == 0) {
    throw Error(Errc::InvalidArgument, "solicit count must be at least 1");
  }
  m_pit.expire(now);

  if (hasSeenNonce(interest.name, interest.nonce)) {
    return {Drop{DropReason::Loop}};
  }
  rememberNonce(interest.name, interest.nonce);

  if (!interest.subscription && !interest.bypassCache) {
    if (auto cached = m_cs.find(interest.name, now)) {
      return {SendData{inFace, std::move(*cached)}};
    }
  }

  if (auto* entry = m_pit.find(interest.name)) {
    const bool retransmission = entry->findDownstream(inFace) != nullptr;
    entry->addDownstream(inFace, interest.nonce, interest.solicitCount);
    entry->extendExpiry(now + interest.lifetime);
    if (!retransmission) {
      return {};
    }
    auto out = forward(interest, inFace);
    if (out.empty()) {
      out.emplace_back(Drop{DropReason::NoRoute});
    }
    return out;
  }

  auto out = forward(interest, inFace);
  if (out.empty()) {
    return {Drop{DropReason::NoRoute}};
  }
  auto& entry = m_pit.insert(interest.name, now + interest.lifetime);
  entry.addDownstream(inFace, interest.nonce, interest.solicitCount);
  return out;
}

std::vector<Emission>
Node::onData(const Data& data, FaceId inFace, sim::Time now)
{
  requireFace(inFace);
  m_pit.expire(now);

  auto* entry = m_pit.find(data.name);
  if (entry == nullptr) {
    return {Drop{DropReason::Unsolicited}};
  }

  std::vector<Emission> out;
  for (auto& downstream : entry->downstreams()) {
    if (downstream.owed == 0) {
      continue;
    }
    --downstream.owed;
    if (downstream.face != inFace) {
      out.emplace_back(SendData{downstream.face, data});
    }
  }
  if (entry->remaining() == 0) {
    m_pit.erase(data.name);
  }
  m_cs.insert(data, now);
  return out;
}

} // namespace oscl::ndn
