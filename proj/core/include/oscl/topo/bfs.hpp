// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_TOPO_BFS_HPP
#define OSCL_TOPO_BFS_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace oscl::topo {

/// Undirected simple graph over dense vertex indices.
using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Breadth-first search expanding at most `bound` levels from `src`.
/// Returns the hop distance to `dst` if it is <= bound.
std::optional<std::uint32_t>
bfsBounded(const Adjacency& graph, std::uint32_t src, std::uint32_t dst, std::uint32_t bound);

/**
 * Same answer as bfsBounded, computed by a bidirectional search that always
 * grows the smaller frontier. Visit marks are epoch-stamped so repeated
 * queries do not clear per-vertex state.
 */
class BoundedPathFinder
{
public:
  std::optional<std::uint32_t>
  distance(const Adjacency& graph, std::uint32_t src, std::uint32_t dst, std::uint32_t bound);

private:
  struct Side
  {
    std::vector<std::uint32_t> stamp;
    std::vector<std::uint32_t> depth;
    std::vector<std::uint32_t> frontier;
    std::vector<std::uint32_t> next;
    std::uint32_t level = 0;
  };

  void
  prepare(std::size_t n);

  Side m_fwd;
  Side m_bwd;
  std::uint32_t m_epoch = 0;
};

} // namespace oscl::topo

#endif // OSCL_TOPO_BFS_HPP
