// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/ndn/fib.hpp"

#include <algorithm>

namespace oscl::ndn {

void
Fib::addNextHop(const Name& prefix, FaceId face)
{
  auto& entry = m_table.findOrInsert(prefix, [&] { return FibEntry{prefix, {}}; });
  if (std::find(entry.nextHops.begin(), entry.nextHops.end(), face) == entry.nextHops.end()) {
    entry.nextHops.push_back(face);
  }
}

} // namespace oscl::ndn
