// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/sim/scheduler.hpp"

#include <utility>

namespace oscl::sim {

void
Scheduler::schedule(Time at, Callback fn)
{
  if (at < m_now) {
    at = m_now;
  }
  m_queue.push(Event{at, m_nextSeq++, std::move(fn)});
}

bool
Scheduler::step()
{
  if (m_queue.empty()) {
    return false;
  }
  // priority_queue::top is const; the callback is moved out before pop
  auto event = std::move(const_cast<Event&>(m_queue.top()));
  m_queue.pop();
  m_now = event.at;
  event.fn();
  return true;
}

void
Scheduler::runUntil(Time limit, const std::function<bool()>& done)
{
  while (!m_queue.empty() && m_queue.top().at <= limit) {
    if (done && done()) {
      return;
    }
    step();
  }
}

void
Scheduler::runFor(Duration span)
{
  Time limit = m_now + span;
  runUntil(limit);
  m_now = limit;
}

void
Scheduler::runAll()
{
  while (step()) {
  }
}

} // namespace oscl::sim
