// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/ndn/fib.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

namespace oscl {
namespace {

/// Prefixes gateway/app/container, three levels with `fanout` children each.
ndn::Fib
makeFib(std::size_t fanout)
{
  ndn::Fib fib;
  FaceId face{0};
  for (std::size_t g = 0; g < fanout; ++g) {
    auto gw = Name{"gw" + std::to_string(g)};
    fib.addNextHop(gw, face);
    for (std::size_t a = 0; a < fanout; ++a) {
      auto app = gw.append("app" + std::to_string(a));
      fib.addNextHop(app, face);
      for (std::size_t c = 0; c < fanout; ++c) {
        fib.addNextHop(app.append("c" + std::to_string(c)), face);
      }
    }
  }
  return fib;
}

void
BM_FibLongestPrefixMatch(benchmark::State& state)
{
  const auto fanout = static_cast<std::size_t>(state.range(0));
  auto fib = makeFib(fanout);
  std::mt19937_64 rng(1);
  std::vector<Name> queries;
  for (int i = 0; i < 1024; ++i) {
    // Five components; the deepest registered prefix has three.
    queries.push_back(Name{"gw" + std::to_string(rng() % fanout),
                           "app" + std::to_string(rng() % fanout),
                           "c" + std::to_string(rng() % (fanout + 1)), "content_instances",
                           std::to_string(i)});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fib.findLongestPrefixMatch(queries[i++ & 1023]));
  }
  state.counters["entries"] = static_cast<double>(fib.size());
}
BENCHMARK(BM_FibLongestPrefixMatch)->Arg(4)->Arg(16)->Arg(32);

void
BM_NameParse(benchmark::State& state)
{
  const std::string uri = "Gscl1/applications/electricity_meter/containers/meter_data/latest";
  for (auto _ : state) {
    benchmark::DoNotOptimize(Name::parse(uri));
  }
}
BENCHMARK(BM_NameParse);

} // namespace
} // namespace oscl
