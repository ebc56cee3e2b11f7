// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_SIM_RANDOM_HPP
#define OSCL_SIM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>

namespace oscl::sim {

/// Seeded generator with platform-independent derived draws.
/// std::mt19937_64 output is fully specified by the standard, while the
/// std distributions are not, so bounded and real draws are done here.
class Rng
{
public:
  explicit
  Rng(std::uint64_t seed)
    : m_engine(seed)
  {
  }

  std::uint64_t
  next()
  {
    return m_engine();
  }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t
  below(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double
  unit()
  {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool
  bernoulli(double p)
  {
    return unit() < p;
  }

  /// Uniform unordered pair of distinct values in [0, n). n must be >= 2.
  std::pair<std::uint32_t, std::uint32_t>
  distinctPair(std::uint32_t n);

private:
  std::mt19937_64 m_engine;
};

} // namespace oscl::sim

#endif // OSCL_SIM_RANDOM_HPP
