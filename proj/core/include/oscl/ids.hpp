// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_IDS_HPP
#define OSCL_IDS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace oscl {

template<typename Tag, typename Rep = std::uint32_t>
class StrongId
{
public:
  using rep_type = Rep;

  constexpr StrongId() = default;

  constexpr explicit
  StrongId(Rep value)
    : m_value(value)
  {
  }

  constexpr Rep
  value() const noexcept
  {
    return m_value;
  }

  friend constexpr auto operator<=>(StrongId, StrongId) = default;

  friend std::ostream&
  operator<<(std::ostream& os, StrongId id)
  {
    return os << id.m_value;
  }

private:
  Rep m_value = 0;
};

/// Identifies one SCL instance (and its embedded forwarder) in a simulated system.
using NodeId = StrongId<struct NodeIdTag>;

/// Identifies an adjacency of one forwarder; only meaningful together with its node.
using FaceId = StrongId<struct FaceIdTag>;

} // namespace oscl

template<typename Tag, typename Rep>
struct std::hash<oscl::StrongId<Tag, Rep>>
{
  std::size_t
  operator()(oscl::StrongId<Tag, Rep> id) const noexcept
  {
    return std::hash<Rep>{}(id.value());
  }
};

#endif // OSCL_IDS_HPP
