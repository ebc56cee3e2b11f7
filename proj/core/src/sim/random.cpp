// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/sim/random.hpp"

#include <limits>

namespace oscl::sim {

std::uint64_t
Rng::below(std::uint64_t bound)
{
  // rejection sampling keeps the draw exactly uniform
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) {
    x = next();
  }
  return x % bound;
}

std::pair<std::uint32_t, std::uint32_t>
Rng::distinctPair(std::uint32_t n)
{
  auto u = static_cast<std::uint32_t>(below(n));
  auto v = static_cast<std::uint32_t>(below(n - 1));
  if (v >= u) {
    ++v;
  }
  return {u, v};
}

} // namespace oscl::sim
