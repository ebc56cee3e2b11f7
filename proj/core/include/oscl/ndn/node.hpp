// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NDN_NODE_HPP
#define OSCL_NDN_NODE_HPP

#include "oscl/ndn/content_store.hpp"
#include "oscl/ndn/fib.hpp"
#include "oscl/ndn/packet.hpp"
#include "oscl/ndn/pit.hpp"

#include <deque>
#include <map>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

namespace oscl::ndn {

/// Local faces attach applications on the same node; hop limits only apply
/// to non-local (overlay) faces.
enum class FaceScope {
  Local,
  NonLocal,
};

enum class Strategy {
  /// First FIB next hop that is not the arrival face.
  BestRoute,
  /// Every FIB next hop of the longest match except the arrival face.
  Multicast,
};

enum class DropReason {
  Loop,
  NoRoute,
  Unsolicited,
};

std::string_view
toString(DropReason reason) noexcept;

struct SendInterest
{
  FaceId face;
  Interest interest;
};

struct SendData
{
  FaceId face;
  Data data;
};

struct Drop
{
  DropReason reason;
};

using Emission = std::variant<SendInterest, SendData, Drop>;

struct NodeConfig
{
  std::size_t csCapacity = kDefaultCsCapacity;
  std::size_t nonceCapacity = std::size_t{1} << 16;
  Strategy strategy = Strategy::BestRoute;
};

/**
 * Forwarding state of one named-data node: Content Store, Pending Interest
 * Table, Forwarding Information Base, faces and the recent-nonce memory.
 *
 * Packet handlers are pure state transitions: they return the emissions the
 * caller must carry out and never touch the network themselves.
 */
class Node
{
public:
  explicit
  Node(NodeId id, NodeConfig config = {});

  NodeId
  id() const noexcept
  {
    return m_id;
  }

  /// Allocates the next free face id.
  FaceId
  addFace(FaceScope scope = FaceScope::NonLocal);

  bool
  hasFace(FaceId face) const
  {
    return m_faces.count(face) != 0;
  }

  FaceScope
  faceScope(FaceId face) const;

  const std::map<FaceId, FaceScope>&
  faces() const noexcept
  {
    return m_faces;
  }

  void
  registerPrefix(const Name& prefix, FaceId face);

  void
  setStrategy(Strategy strategy) noexcept
  {
    m_config.strategy = strategy;
  }

  /// Strategy override for one namespace.
  void
  setStrategy(const Name& prefix, Strategy strategy)
  {
    m_strategyChoice.insert(prefix, strategy);
  }

  Strategy
  strategyFor(const Name& name) const;

  /**
   * Interest pipeline. Outcomes, checked in order:
   *  - (name, nonce) already seen here: Drop(Loop);
   *  - fresh Content Store hit (non-subscription): Data back to inFace;
   *  - pending entry, new downstream face: face recorded, nothing forwarded;
   *  - pending entry, known downstream face (retransmission): forwarded again;
   *  - FIB match with a usable next hop: entry created, Interest forwarded;
   *  - otherwise Drop(NoRoute).
   */
  std::vector<Emission>
  onInterest(const Interest& interest, FaceId inFace, sim::Time now);

  /// Data pipeline: satisfies the matching entry (exact name), sends one copy
  /// per owed downstream face and caches the packet. Unsolicited Data is
  /// dropped without touching the Content Store.
  std::vector<Emission>
  onData(const Data& data, FaceId inFace, sim::Time now);

  std::size_t
  expirePit(sim::Time now)
  {
    return m_pit.expire(now);
  }

  ContentStore&
  contentStore() noexcept
  {
    return m_cs;
  }

  const ContentStore&
  contentStore() const noexcept
  {
    return m_cs;
  }

  const Pit&
  pit() const noexcept
  {
    return m_pit;
  }

  const Fib&
  fib() const noexcept
  {
    return m_fib;
  }

  bool
  hasSeenNonce(const Name& name, std::uint64_t nonce) const;

private:
  void
  requireFace(FaceId face) const;

  void
  rememberNonce(const Name& name, std::uint64_t nonce);

  std::vector<Emission>
  forward(const Interest& interest, FaceId inFace);

  struct NonceKey
  {
    Name name;
    std::uint64_t nonce;

    bool
    operator==(const NonceKey&) const = default;
  };

  struct NonceKeyHash
  {
    std::size_t
    operator()(const NonceKey& key) const noexcept
    {
      return std::hash<Name>{}(key.name) ^ (std::hash<std::uint64_t>{}(key.nonce) * 31);
    }
  };

  NodeId m_id;
  NodeConfig m_config;
  std::map<FaceId, FaceScope> m_faces;
  std::uint32_t m_nextFace = 0;
  ContentStore m_cs;
  Pit m_pit;
  Fib m_fib;
  PrefixTable<Strategy> m_strategyChoice;
  std::deque<NonceKey> m_nonceOrder;
  std::unordered_set<NonceKey, NonceKeyHash> m_nonces;
};

} // namespace oscl::ndn

#endif // OSCL_NDN_NODE_HPP
