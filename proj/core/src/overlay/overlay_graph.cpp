// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/overlay/overlay_graph.hpp"

#include "oscl/error.hpp"

#include <sstream>

namespace oscl::overlay {

void
OverlayGraph::addVertex(NodeId v)
{
  if (v.value() >= m_present.size()) {
    m_present.resize(v.value() + 1, false);
    m_adjacency.resize(v.value() + 1);
  }
  if (!m_present[v.value()]) {
    m_present[v.value()] = true;
    ++m_vertexCount;
  }
}

bool
OverlayGraph::hasVertex(NodeId v) const noexcept
{
  return v.value() < m_present.size() && m_present[v.value()];
}

void
OverlayGraph::requireVertex(NodeId v) const
{
  if (!hasVertex(v)) {
    std::ostringstream msg;
    msg << "node " << v << " is not part of the overlay";
    throw Error(Errc::UnknownNode, msg.str());
  }
}

bool
OverlayGraph::addEdge(NodeId a, NodeId b, FaceId faceA, FaceId faceB, LinkMetrics metrics)
{
  requireVertex(a);
  requireVertex(b);
  if (a == b) {
    throw Error(Errc::InvalidArgument, "overlay links cannot be self-loops");
  }
  if (!(metrics.loss >= 0.0 && metrics.loss <= 1.0) || metrics.delayMs < 0.0 || metrics.capacity < 0.0) {
    throw Error(Errc::InvalidArgument, "link metrics out of range");
  }
  auto k = key(a, b);
  if (m_edges.count(k) != 0) {
    return false;
  }
  m_edges.emplace(k, Edge{a, b, faceA, faceB, metrics});
  m_faceIndex.emplace(std::pair{a, faceA}, k);
  m_faceIndex.emplace(std::pair{b, faceB}, k);
  m_adjacency[a.value()].push_back(b.value());
  m_adjacency[b.value()].push_back(a.value());
  return true;
}

bool
OverlayGraph::hasEdge(NodeId a, NodeId b) const
{
  return m_edges.count(key(a, b)) != 0;
}

const Edge*
OverlayGraph::findEdge(NodeId a, NodeId b) const
{
  auto it = m_edges.find(key(a, b));
  return it == m_edges.end() ? nullptr : &it->second;
}

std::optional<Hop>
OverlayGraph::traverse(NodeId node, FaceId face) const
{
  auto it = m_faceIndex.find({node, face});
  if (it == m_faceIndex.end()) {
    return std::nullopt;
  }
  const Edge& e = m_edges.at(it->second);
  if (e.a == node) {
    return Hop{e.b, e.faceB, &e.metrics};
  }
  return Hop{e.a, e.faceA, &e.metrics};
}

std::optional<FaceId>
OverlayGraph::faceTowards(NodeId from, NodeId to) const
{
  const Edge* e = findEdge(from, to);
  if (e == nullptr) {
    return std::nullopt;
  }
  return e->a == from ? e->faceA : e->faceB;
}

std::optional<std::uint32_t>
OverlayGraph::pathLength(NodeId u, NodeId v, std::uint32_t bound) const
{
  requireVertex(u);
  requireVertex(v);
  return topo::bfsBounded(m_adjacency, u.value(), v.value(), bound);
}

const std::vector<std::uint32_t>&
OverlayGraph::neighbors(NodeId v) const
{
  requireVertex(v);
  return m_adjacency[v.value()];
}

} // namespace oscl::overlay
