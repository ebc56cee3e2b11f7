// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal synchronous network of ndn::Node instances: emissions on linked
// faces are queued for the peer, emissions on application faces are
// recorded. Independent of the overlay layer.

#ifndef OSCL_TESTS_SUPPORT_NDN_WIRE_HPP
#define OSCL_TESTS_SUPPORT_NDN_WIRE_HPP

#include "oscl/ndn/node.hpp"

#include <deque>
#include <map>
#include <variant>
#include <vector>

namespace oscl::test {

class NdnWire
{
public:
  using Packet = std::variant<ndn::Interest, ndn::Data>;

  struct AppDelivery
  {
    std::size_t node;
    FaceId face;
    Packet packet;
  };

  std::size_t
  addNode(ndn::NodeConfig config = {})
  {
    m_nodes.emplace_back(NodeId{static_cast<std::uint32_t>(m_nodes.size())}, config);
    return m_nodes.size() - 1;
  }

  ndn::Node&
  node(std::size_t i)
  {
    return m_nodes[i];
  }

  /// Returns (face on a, face on b).
  std::pair<FaceId, FaceId>
  link(std::size_t a, std::size_t b)
  {
    auto fa = m_nodes[a].addFace(ndn::FaceScope::NonLocal);
    auto fb = m_nodes[b].addFace(ndn::FaceScope::NonLocal);
    m_peer[{a, fa}] = {b, fb};
    m_peer[{b, fb}] = {a, fa};
    return {fa, fb};
  }

  FaceId
  addApp(std::size_t a)
  {
    return m_nodes[a].addFace(ndn::FaceScope::Local);
  }

  void
  inject(std::size_t at, FaceId face, Packet packet)
  {
    m_queue.push_back({at, face, std::move(packet)});
  }

  /// Processes queued packets until none remain.
  void
  run()
  {
    while (!m_queue.empty()) {
      auto ev = std::move(m_queue.front());
      m_queue.pop_front();
      auto& n = m_nodes[ev.node];
      std::vector<ndn::Emission> out;
      if (const auto* i = std::get_if<ndn::Interest>(&ev.packet)) {
        out = n.onInterest(*i, ev.face, m_now);
      }
      else {
        out = n.onData(std::get<ndn::Data>(ev.packet), ev.face, m_now);
      }
      for (auto& e : out) {
        if (auto* si = std::get_if<ndn::SendInterest>(&e)) {
          send(ev.node, si->face, std::move(si->interest));
        }
        else if (auto* sd = std::get_if<ndn::SendData>(&e)) {
          send(ev.node, sd->face, std::move(sd->data));
        }
        else {
          ++m_drops;
        }
      }
    }
  }

  void
  setNow(sim::Time t)
  {
    m_now = t;
  }

  const std::vector<AppDelivery>&
  appDeliveries() const
  {
    return m_app;
  }

  /// Interest packets sent over the link from a to b.
  std::size_t
  interestsSent(std::size_t a, std::size_t b) const
  {
    auto it = m_interestCount.find({a, b});
    return it == m_interestCount.end() ? 0 : it->second;
  }

  std::size_t
  dataSent(std::size_t a, std::size_t b) const
  {
    auto it = m_dataCount.find({a, b});
    return it == m_dataCount.end() ? 0 : it->second;
  }

  std::size_t
  drops() const
  {
    return m_drops;
  }

private:
  struct Event
  {
    std::size_t node;
    FaceId face;
    Packet packet;
  };

  void
  send(std::size_t from, FaceId face, Packet packet)
  {
    auto it = m_peer.find({from, face});
    if (it == m_peer.end()) {
      m_app.push_back({from, face, std::move(packet)});
      return;
    }
    auto [to, toFace] = it->second;
    auto& counts = std::holds_alternative<ndn::Interest>(packet) ? m_interestCount : m_dataCount;
    ++counts[{from, to}];
    m_queue.push_back({to, toFace, std::move(packet)});
  }

  std::deque<ndn::Node> m_nodes;
  std::map<std::pair<std::size_t, FaceId>, std::pair<std::size_t, FaceId>> m_peer;
  std::deque<Event> m_queue;
  std::vector<AppDelivery> m_app;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> m_interestCount;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> m_dataCount;
  std::size_t m_drops = 0;
  sim::Time m_now{};
};

} // namespace oscl::test

#endif // OSCL_TESTS_SUPPORT_NDN_WIRE_HPP
