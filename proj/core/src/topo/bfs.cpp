// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/topo/bfs.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace oscl::topo {

namespace {

constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();

} // namespace

std::optional<std::uint32_t>
bfsBounded(const Adjacency& graph, std::uint32_t src, std::uint32_t dst, std::uint32_t bound)
{
  if (src == dst) {
    return 0;
  }
  std::vector<std::uint32_t> dist(graph.size(), kUnseen);
  std::deque<std::uint32_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    if (dist[u] == bound) {
      continue;
    }
    for (auto v : graph[u]) {
      if (dist[v] != kUnseen) {
        continue;
      }
      dist[v] = dist[u] + 1;
      if (v == dst) {
        return dist[v];
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

void
BoundedPathFinder::prepare(std::size_t n)
{
  for (Side* side : {&m_fwd, &m_bwd}) {
    if (side->stamp.size() < n) {
      side->stamp.resize(n, 0);
      side->depth.resize(n, 0);
    }
    side->frontier.clear();
    side->next.clear();
    side->level = 0;
  }
  if (++m_epoch == 0) {
    // stamp wrapped around; forget all marks
    for (Side* side : {&m_fwd, &m_bwd}) {
      std::fill(side->stamp.begin(), side->stamp.end(), 0);
    }
    m_epoch = 1;
  }
}

std::optional<std::uint32_t>
BoundedPathFinder::distance(const Adjacency& graph, std::uint32_t src, std::uint32_t dst,
                            std::uint32_t bound)
{
  if (src == dst) {
    return 0;
  }
  if (bound == 0) {
    return std::nullopt;
  }
  prepare(graph.size());

  auto mark = [this] (Side& side, std::uint32_t v, std::uint32_t d) {
    side.stamp[v] = m_epoch;
    side.depth[v] = d;
  };
  mark(m_fwd, src, 0);
  mark(m_bwd, dst, 0);
  m_fwd.frontier.push_back(src);
  m_bwd.frontier.push_back(dst);

  // Invariant: no path shorter than fwd.level + bwd.level + 1 exists. The
  // first level expansion that touches the other side therefore yields the
  // exact distance.
  while (m_fwd.level + m_bwd.level + 1 <= bound) {
    if (m_fwd.frontier.empty() || m_bwd.frontier.empty()) {
      return std::nullopt;
    }
    auto frontierCost = [&graph] (const std::vector<std::uint32_t>& f) {
      std::size_t total = 0;
      for (auto v : f) {
        total += graph[v].size();
      }
      return total;
    };
    const bool growForward = frontierCost(m_fwd.frontier) <= frontierCost(m_bwd.frontier);
    Side& grow = growForward ? m_fwd : m_bwd;
    Side& other = growForward ? m_bwd : m_fwd;

    std::uint32_t best = kUnseen;
    grow.next.clear();
    for (auto u : grow.frontier) {
      for (auto v : graph[u]) {
        if (other.stamp[v] == m_epoch) {
          best = std::min(best, grow.level + 1 + other.depth[v]);
          continue;
        }
        if (grow.stamp[v] == m_epoch) {
          continue;
        }
        mark(grow, v, grow.level + 1);
        grow.next.push_back(v);
      }
    }
    if (best != kUnseen) {
      return best <= bound ? std::optional<std::uint32_t>(best) : std::nullopt;
    }
    ++grow.level;
    std::swap(grow.frontier, grow.next);
  }
  return std::nullopt;
}

} // namespace oscl::topo
