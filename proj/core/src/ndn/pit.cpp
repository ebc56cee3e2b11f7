// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/ndn/pit.hpp"

#include <algorithm>

namespace oscl::ndn {

PitDownstream*
PitEntry::findDownstream(FaceId face)
{
  auto it = std::find_if(m_downstreams.begin(), m_downstreams.end(),
                         [face] (const PitDownstream& d) { return d.face == face; });
  return it == m_downstreams.end() ? nullptr : &*it;
}

void
PitEntry::addDownstream(FaceId face, std::uint64_t nonce, std::uint32_t solicit)
{
  if (auto* existing = findDownstream(face)) {
    existing->nonces.push_back(nonce);
    existing->owed = std::max(existing->owed, solicit);
    return;
  }
  m_downstreams.push_back(PitDownstream{face, {nonce}, solicit});
}

bool
PitEntry::hasNonce(std::uint64_t nonce) const
{
  return std::any_of(m_downstreams.begin(), m_downstreams.end(), [nonce] (const PitDownstream& d) {
    return std::find(d.nonces.begin(), d.nonces.end(), nonce) != d.nonces.end();
  });
}

std::uint32_t
PitEntry::remaining() const noexcept
{
  std::uint32_t most = 0;
  for (const auto& d : m_downstreams) {
    most = std::max(most, d.owed);
  }
  return most;
}

PitEntry*
Pit::find(const Name& name)
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

const PitEntry*
Pit::find(const Name& name) const
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

PitEntry&
Pit::insert(const Name& name, sim::Time expiry)
{
  auto [it, inserted] = m_entries.try_emplace(name, name, expiry);
  return it->second;
}

std::size_t
Pit::expire(sim::Time now)
{
  return std::erase_if(m_entries, [now] (const auto& kv) { return kv.second.expiry() < now; });
}

} // namespace oscl::ndn
