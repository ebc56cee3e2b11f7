// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NDN_FIB_HPP
#define OSCL_NDN_FIB_HPP

#include "oscl/ids.hpp"
#include "oscl/names/prefix_table.hpp"

#include <optional>
#include <vector>

namespace oscl::ndn {

struct FibEntry
{
  Name prefix;
  /// Rank order is preference order; never empty, never duplicated.
  std::vector<FaceId> nextHops;
};

class Fib
{
public:
  /// Appends `face` to the next hops of `prefix`; a repeat registration is a no-op.
  void
  addNextHop(const Name& prefix, FaceId face);

  std::optional<PrefixMatch<FibEntry>>
  findLongestPrefixMatch(const Name& name) const
  {
    return m_table.longestPrefixMatch(name);
  }

  const FibEntry*
  findExactMatch(const Name& prefix) const
  {
    return m_table.find(prefix);
  }

  std::size_t
  size() const noexcept
  {
    return m_table.size();
  }

  template<typename Fn>
  void
  forEach(Fn&& fn) const
  {
    m_table.forEach([&] (const Name&, const FibEntry& entry) { fn(entry); });
  }

private:
  PrefixTable<FibEntry> m_table;
};

} // namespace oscl::ndn

#endif // OSCL_NDN_FIB_HPP
