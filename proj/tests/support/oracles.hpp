// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the value types.

#ifndef OSCL_TESTS_SUPPORT_ORACLES_HPP
#define OSCL_TESTS_SUPPORT_ORACLES_HPP

#include "oscl/names/name.hpp"
#include "oscl/ndn/packet.hpp"
#include "oscl/topo/bfs.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oscl::test {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// All-pairs hop distances; kUnreachable when disconnected.
inline std::vector<std::vector<std::uint32_t>>
floydWarshall(const topo::Adjacency& g)
{
  const auto n = g.size();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kUnreachable));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (auto j : g[i]) {
      d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = d[i][j] >= kUnreachable ? kUnreachable : static_cast<std::uint32_t>(d[i][j]);
    }
  }
  return out;
}

/// Erdos-Renyi style simple undirected graph.
inline topo::Adjacency
randomGraph(std::uint32_t n, double p, std::mt19937_64& rng)
{
  std::bernoulli_distribution edge(p);
  topo::Adjacency g(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        g[i].push_back(j);
        g[j].push_back(i);
      }
    }
  }
  return g;
}

/// Exhaustive scan for the stored prefix with the most components.
template<typename V>
std::optional<std::pair<Name, V>>
bruteForceLpm(const std::vector<std::pair<Name, V>>& entries, const Name& name)
{
  std::optional<std::pair<Name, V>> best;
  for (const auto& [prefix, value] : entries) {
    if (prefix.size() > name.size()) {
      continue;
    }
    bool match = true;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] != name[i]) {
        match = false;
        break;
      }
    }
    if (match && (!best || prefix.size() > best->first.size())) {
      best = std::pair{prefix, value};
    }
  }
  return best;
}

/// Content Store reference: an unbounded record list plus a recency order.
class ReferenceCs
{
public:
  explicit
  ReferenceCs(std::size_t capacity)
    : m_capacity(capacity)
  {
  }

  std::optional<ndn::Data>
  find(const Name& name, sim::Time now)
  {
    auto it = locate(name);
    if (it == m_items.end()) {
      return std::nullopt;
    }
    if (it->inserted + it->data.freshness < now) {
      m_items.erase(it);
      return std::nullopt;
    }
    auto item = *it;
    m_items.erase(it);
    m_items.push_back(item);
    return item.data;
  }

  void
  insert(const ndn::Data& data, sim::Time now)
  {
    if (m_capacity == 0) {
      return;
    }
    if (auto it = locate(data.name); it != m_items.end()) {
      m_items.erase(it);
    }
    else if (m_items.size() == m_capacity) {
      m_items.erase(m_items.begin());
    }
    m_items.push_back({data, now});
  }

  std::size_t
  size() const
  {
    return m_items.size();
  }

private:
  struct Item
  {
    ndn::Data data;
    sim::Time inserted;
  };

  std::vector<Item>::iterator
  locate(const Name& name)
  {
    return std::find_if(m_items.begin(), m_items.end(),
                        [&name] (const Item& i) { return i.data.name == name; });
  }

  std::size_t m_capacity;
  std::vector<Item> m_items; // back = most recently used
};

/// Random name of 1..maxDepth components drawn from a small alphabet so that
/// prefixes collide often.
inline Name
randomName(std::mt19937_64& rng, std::size_t maxDepth, std::size_t alphabet = 3)
{
  std::uniform_int_distribution<std::size_t> depth(1, maxDepth);
  std::uniform_int_distribution<std::size_t> label(0, alphabet - 1);
  std::vector<std::string> parts;
  const auto n = depth(rng);
  for (std::size_t i = 0; i < n; ++i) {
    parts.push_back(std::string(1, static_cast<char>('a' + label(rng))));
  }
  std::string text;
  for (const auto& p : parts) {
    text += (text.empty() ? "" : "/") + p;
  }
  return Name::parse(text);
}

} // namespace oscl::test

#endif // OSCL_TESTS_SUPPORT_ORACLES_HPP
