// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_OVERLAY_OVERLAY_GRAPH_HPP
#define OSCL_OVERLAY_OVERLAY_GRAPH_HPP

#include "oscl/ids.hpp"
#include "oscl/topo/bfs.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oscl::overlay {

struct LinkMetrics
{
  double delayMs = 10.0;
  /// Independent per-packet loss probability in [0, 1].
  double loss = 0.0;
  /// Units per second.
  double capacity = 100.0;
};

struct Edge
{
  NodeId a;
  NodeId b;
  FaceId faceA; ///< face on `a` leading to `b`
  FaceId faceB; ///< face on `b` leading to `a`
  LinkMetrics metrics;
};

/// Where a packet sent on (node, face) arrives.
struct Hop
{
  NodeId neighbor;
  FaceId neighborFace;
  const LinkMetrics* metrics;
};

/// Logical links between SCL instances. Simple undirected graph: no
/// self-loops, no parallel edges, and links are never removed.
class OverlayGraph
{
public:
  void
  addVertex(NodeId v);

  bool
  hasVertex(NodeId v) const noexcept;

  /// Returns false (and changes nothing) if the edge already exists.
  bool
  addEdge(NodeId a, NodeId b, FaceId faceA, FaceId faceB, LinkMetrics metrics);

  bool
  hasEdge(NodeId a, NodeId b) const;

  const Edge*
  findEdge(NodeId a, NodeId b) const;

  std::optional<Hop>
  traverse(NodeId node, FaceId face) const;

  /// Face on `from` leading directly to `to`.
  std::optional<FaceId>
  faceTowards(NodeId from, NodeId to) const;

  /// Shortest hop count if it is <= bound (bounded breadth-first search).
  /// Throws UnknownNode.
  std::optional<std::uint32_t>
  pathLength(NodeId u, NodeId v, std::uint32_t bound) const;

  std::size_t
  vertexCount() const noexcept
  {
    return m_vertexCount;
  }

  std::size_t
  edgeCount() const noexcept
  {
    return m_edges.size();
  }

  const std::vector<std::uint32_t>&
  neighbors(NodeId v) const;

  const std::map<std::pair<NodeId, NodeId>, Edge>&
  edges() const noexcept
  {
    return m_edges;
  }

  const topo::Adjacency&
  adjacency() const noexcept
  {
    return m_adjacency;
  }

private:
  void
  requireVertex(NodeId v) const;

  static std::pair<NodeId, NodeId>
  key(NodeId a, NodeId b)
  {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  topo::Adjacency m_adjacency; // indexed by NodeId value
  std::vector<bool> m_present;
  std::size_t m_vertexCount = 0;
  std::map<std::pair<NodeId, NodeId>, Edge> m_edges;
  std::map<std::pair<NodeId, FaceId>, std::pair<NodeId, NodeId>> m_faceIndex;
};

} // namespace oscl::overlay

#endif // OSCL_OVERLAY_OVERLAY_GRAPH_HPP
