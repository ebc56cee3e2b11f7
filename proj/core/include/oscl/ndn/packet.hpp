// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NDN_PACKET_HPP
#define OSCL_NDN_PACKET_HPP

#include "oscl/ids.hpp"
#include "oscl/names/name.hpp"
#include "oscl/sim/clock.hpp"

#include <cstdint>
#include <string>

namespace oscl::ndn {

inline constexpr sim::Duration kDefaultInterestLifetime{4000};

struct Interest
{
  Name name;
  std::uint64_t nonce = 0;
  /// Remaining overlay hops; an Interest holding 0 is only handed to local faces.
  std::uint32_t hopLimit = 0;
  /// Number of Data packets the consumer is willing to receive for this
  /// Interest. Values above 1 keep the PIT entry alive across several Data.
  std::uint32_t solicitCount = 1;
  sim::Duration lifetime = kDefaultInterestLifetime;
  /// Asks for Data published after the Interest reaches the producer.
  /// Implies bypassCache.
  bool subscription = false;
  /// Never answered from a Content Store; only the producer may reply.
  bool bypassCache = false;
};

struct Data
{
  Name name;
  std::string payload;
  sim::Duration freshness{10000};
  /// Stands in for a content signature.
  NodeId producer;
};

} // namespace oscl::ndn

#endif // OSCL_NDN_PACKET_HPP
