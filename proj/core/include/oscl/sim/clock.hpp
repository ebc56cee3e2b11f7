// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_SIM_CLOCK_HPP
#define OSCL_SIM_CLOCK_HPP

#include <chrono>
#include <cstdint>

namespace oscl::sim {

using Duration = std::chrono::milliseconds;

/// Simulated time. Never tied to the wall clock; epoch is the start of a run.
struct Clock
{
  using duration = Duration;
  using rep = duration::rep;
  using period = duration::period;
  using time_point = std::chrono::time_point<Clock>;
  static constexpr bool is_steady = true;
};

using Time = Clock::time_point;

constexpr std::int64_t
toMillis(Time t) noexcept
{
  return t.time_since_epoch().count();
}

constexpr Time
atMillis(std::int64_t ms) noexcept
{
  return Time{Duration{ms}};
}

} // namespace oscl::sim

#endif // OSCL_SIM_CLOCK_HPP
