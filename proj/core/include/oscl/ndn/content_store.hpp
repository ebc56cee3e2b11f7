// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NDN_CONTENT_STORE_HPP
#define OSCL_NDN_CONTENT_STORE_HPP

#include "oscl/ndn/packet.hpp"

#include <list>
#include <optional>
#include <unordered_map>

namespace oscl::ndn {

inline constexpr std::size_t kDefaultCsCapacity = 64;

/// LRU cache of Data packets. A stale entry (inserted + freshness < now) is
/// never returned and is dropped when a lookup meets it.
class ContentStore
{
public:
  explicit
  ContentStore(std::size_t capacity = kDefaultCsCapacity)
    : m_capacity(capacity)
  {
  }

  /// Returns a fresh copy and marks the entry most recently used.
  std::optional<Data>
  find(const Name& name, sim::Time now);

  /// Inserts or replaces; evicts the least recently used entry when full.
  void
  insert(const Data& data, sim::Time now);

  /// Presence check that neither refreshes recency nor considers freshness.
  bool
  contains(const Name& name) const
  {
    return m_index.count(name) != 0;
  }

  std::size_t
  size() const noexcept
  {
    return m_index.size();
  }

  std::size_t
  capacity() const noexcept
  {
    return m_capacity;
  }

private:
  struct Entry
  {
    Data data;
    sim::Time insertedAt;
  };

  std::size_t m_capacity;
  std::list<Entry> m_lru; // front = most recently used
  std::unordered_map<Name, std::list<Entry>::iterator> m_index;
};

} // namespace oscl::ndn

#endif // OSCL_NDN_CONTENT_STORE_HPP
