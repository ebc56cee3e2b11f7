// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_SIM_SCHEDULER_HPP
#define OSCL_SIM_SCHEDULER_HPP

#include "oscl/sim/clock.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

namespace oscl::sim {

/// Single-threaded discrete-event loop. Events at equal times run in the
/// order they were scheduled, which makes every run reproducible.
class Scheduler
{
public:
  using Callback = std::function<void()>;

  Time
  now() const noexcept
  {
    return m_now;
  }

  void
  schedule(Time at, Callback fn);

  void
  scheduleAfter(Duration delay, Callback fn)
  {
    schedule(m_now + delay, std::move(fn));
  }

  bool
  empty() const noexcept
  {
    return m_queue.empty();
  }

  std::size_t
  pending() const noexcept
  {
    return m_queue.size();
  }

  /// Executes the earliest event. Returns false when nothing is queued.
  bool
  step();

  /// Runs events with time <= limit until `done` returns true or no such
  /// event remains. The clock is left at the last executed event.
  void
  runUntil(Time limit, const std::function<bool()>& done = {});

  /// Runs every event up to now + span, then advances the clock to that instant.
  void
  runFor(Duration span);

  /// Drains the queue. Only terminates when no event reschedules itself forever.
  void
  runAll();

private:
  struct Event
  {
    Time at;
    std::uint64_t seq;
    Callback fn;
  };

  struct Later
  {
    bool
    operator()(const Event& a, const Event& b) const noexcept
    {
      return a.at != b.at ? a.at > b.at : a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> m_queue;
  Time m_now{};
  std::uint64_t m_nextSeq = 0;
};

} // namespace oscl::sim

#endif // OSCL_SIM_SCHEDULER_HPP
