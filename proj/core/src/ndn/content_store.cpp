// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/ndn/content_store.hpp"

namespace oscl::ndn {

std::optional<Data>
ContentStore::find(const Name& name, sim::Time now)
{
  auto it = m_index.find(name);
  if (it == m_index.end()) {
    return std::nullopt;
  }
  auto entry = it->second;
  if (entry->insertedAt + entry->data.freshness < now) {
    m_lru.erase(entry);
    m_index.erase(it);
    return std::nullopt;
  }
  m_lru.splice(m_lru.begin(), m_lru, entry);
  return entry->data;
}

void
ContentStore::insert(const Data& data, sim::Time now)
{
  if (m_capacity == 0) {
    return;
  }
  if (auto it = m_index.find(data.name); it != m_index.end()) {
    it->second->data = data;
    it->second->insertedAt = now;
    m_lru.splice(m_lru.begin(), m_lru, it->second);
    return;
  }
  if (m_index.size() >= m_capacity) {
    m_index.erase(m_lru.back().data.name);
    m_lru.pop_back();
  }
  m_lru.push_front(Entry{data, now});
  m_index.emplace(data.name, m_lru.begin());
}

} // namespace oscl::ndn
