// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NDN_PIT_HPP
#define OSCL_NDN_PIT_HPP

#include "oscl/ids.hpp"
#include "oscl/names/name.hpp"
#include "oscl/sim/clock.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace oscl::ndn {

/// One arrival face of a pending Interest.
struct PitDownstream
{
  FaceId face;
  std::vector<std::uint64_t> nonces;
  /// Data packets still owed to this face.
  std::uint32_t owed = 0;
};

class PitEntry
{
public:
  PitEntry(Name name, sim::Time expiry)
    : m_name(std::move(name))
    , m_expiry(expiry)
  {
  }

  const Name&
  name() const noexcept
  {
    return m_name;
  }

  sim::Time
  expiry() const noexcept
  {
    return m_expiry;
  }

  void
  extendExpiry(sim::Time t) noexcept
  {
    if (t > m_expiry) {
      m_expiry = t;
    }
  }

  const std::vector<PitDownstream>&
  downstreams() const noexcept
  {
    return m_downstreams;
  }

  std::vector<PitDownstream>&
  downstreams() noexcept
  {
    return m_downstreams;
  }

  PitDownstream*
  findDownstream(FaceId face);

  void
  addDownstream(FaceId face, std::uint64_t nonce, std::uint32_t solicit);

  bool
  hasNonce(std::uint64_t nonce) const;

  /// Data packets the entry is still waiting for: the largest debt over
  /// all downstreams.
  std::uint32_t
  remaining() const noexcept;

private:
  Name m_name;
  sim::Time m_expiry;
  std::vector<PitDownstream> m_downstreams;
};

/// Pending Interest Table: at most one entry per exact name.
class Pit
{
public:
  PitEntry*
  find(const Name& name);

  const PitEntry*
  find(const Name& name) const;

  PitEntry&
  insert(const Name& name, sim::Time expiry);

  void
  erase(const Name& name)
  {
    m_entries.erase(name);
  }

  /// Removes entries whose expiry is before `now`; returns how many.
  std::size_t
  expire(sim::Time now);

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  auto
  begin() const
  {
    return m_entries.begin();
  }

  auto
  end() const
  {
    return m_entries.end();
  }

private:
  std::map<Name, PitEntry> m_entries;
};

} // namespace oscl::ndn

#endif // OSCL_NDN_PIT_HPP
