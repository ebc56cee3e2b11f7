// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/ndn/node.hpp"

#include "error_code.hpp"
#include "ndn_wire.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace oscl::ndn {
namespace {

using test::errorOf;

const sim::Time kT0 = sim::atMillis(0);

Interest
makeInterest(const Name& name, std::uint64_t nonce, std::uint32_t hopLimit = 8,
             std::uint32_t solicit = 1)
{
  return Interest{.name = name, .nonce = nonce, .hopLimit = hopLimit, .solicitCount = solicit};
}

Data
makeData(const Name& name, std::string payload = "v")
{
  return Data{.name = name, .payload = std::move(payload), .producer = NodeId{0}};
}

template<typename T>
std::vector<T>
only(const std::vector<Emission>& out)
{
  std::vector<T> result;
  for (const auto& e : out) {
    if (const auto* x = std::get_if<T>(&e)) {
      result.push_back(*x);
    }
  }
  return result;
}

/// Relay with two consumer faces and one upstream face routing /p.
struct Relay
{
  Node node{NodeId{1}};
  FaceId f1 = node.addFace();
  FaceId f2 = node.addFace();
  FaceId up = node.addFace();
  Name name = Name::parse("p/x");

  Relay()
  {
    node.registerPrefix(Name::parse("p"), up);
  }
};

TEST(NdnNode, FirstInterestCreatesEntryAndForwards)
{
  Relay r;
  auto out = r.node.onInterest(makeInterest(r.name, 1, 5), r.f1, kT0);
  auto sends = only<SendInterest>(out);
  ASSERT_EQ(sends.size(), 1u);
  EXPECT_EQ(sends[0].face, r.up);
  EXPECT_EQ(sends[0].interest.hopLimit, 4u);
  ASSERT_NE(r.node.pit().find(r.name), nullptr);
  EXPECT_EQ(r.node.pit().size(), 1u);
}

TEST(NdnNode, SecondConsumerIsSuppressed)
{
  Relay r;
  r.node.onInterest(makeInterest(r.name, 1), r.f1, kT0);
  auto out = r.node.onInterest(makeInterest(r.name, 2), r.f2, kT0);
  EXPECT_TRUE(out.empty());
  const auto* entry = r.node.pit().find(r.name);
  ASSERT_NE(entry, nullptr);
  ASSERT_EQ(entry->downstreams().size(), 2u);
  EXPECT_EQ(entry->downstreams()[0].face, r.f1);
  EXPECT_EQ(entry->downstreams()[1].face, r.f2);
}

TEST(NdnNode, SuppressedInterestExtendsExpiryToLaterDeadline)
{
  Relay r;
  auto a = makeInterest(r.name, 1);
  a.lifetime = sim::Duration{1000};
  auto b = makeInterest(r.name, 2);
  b.lifetime = sim::Duration{300};
  r.node.onInterest(a, r.f1, kT0);
  r.node.onInterest(b, r.f2, sim::atMillis(500));
  EXPECT_EQ(sim::toMillis(r.node.pit().find(r.name)->expiry()), 1000);
  r.node.onInterest(b, r.f2, sim::atMillis(900)); // same nonce: loop, no change
  auto c = makeInterest(r.name, 3);
  c.lifetime = sim::Duration{300};
  r.node.onInterest(c, r.f2, sim::atMillis(900));
  EXPECT_EQ(sim::toMillis(r.node.pit().find(r.name)->expiry()), 1200);
}

TEST(NdnNode, RetransmissionFromKnownFaceIsForwardedAgain)
{
  Relay r;
  r.node.onInterest(makeInterest(r.name, 1), r.f1, kT0);
  auto out = r.node.onInterest(makeInterest(r.name, 2), r.f1, kT0);
  EXPECT_EQ(only<SendInterest>(out).size(), 1u);
  EXPECT_EQ(r.node.pit().find(r.name)->downstreams().size(), 1u);
}

TEST(NdnNode, DuplicateNonceIsDroppedAsLoop)
{
  Relay r;
  r.node.onInterest(makeInterest(r.name, 7), r.f1, kT0);
  for (FaceId face : {r.f1, r.f2, r.up}) {
    auto out = r.node.onInterest(makeInterest(r.name, 7), face, kT0);
    ASSERT_EQ(out.size(), 1u);
    ASSERT_TRUE(std::holds_alternative<Drop>(out[0]));
    EXPECT_EQ(std::get<Drop>(out[0]).reason, DropReason::Loop);
  }
  EXPECT_EQ(r.node.pit().find(r.name)->downstreams().size(), 1u);
}

TEST(NdnNode, NoRouteIsDropped)
{
  Relay r;
  auto out = r.node.onInterest(makeInterest(Name::parse("q"), 1), r.f1, kT0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(std::get<Drop>(out[0]).reason, DropReason::NoRoute);
  EXPECT_EQ(r.node.pit().size(), 0u);
}

TEST(NdnNode, InterestIsNeverSentBackOnArrivalFace)
{
  Relay r;
  auto out = r.node.onInterest(makeInterest(r.name, 1), r.up, kT0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(std::get<Drop>(out[0]).reason, DropReason::NoRoute);
}

TEST(NdnNode, HopLimitZeroOnlyReachesLocalFaces)
{
  Node node{NodeId{0}};
  auto in = node.addFace();
  auto remote = node.addFace(FaceScope::NonLocal);
  auto app = node.addFace(FaceScope::Local);
  node.registerPrefix(Name::parse("r"), remote);
  node.registerPrefix(Name::parse("l"), app);

  auto dropped = node.onInterest(makeInterest(Name::parse("r/a"), 1, 0), in, kT0);
  ASSERT_EQ(dropped.size(), 1u);
  EXPECT_EQ(std::get<Drop>(dropped[0]).reason, DropReason::NoRoute);

  auto local = only<SendInterest>(node.onInterest(makeInterest(Name::parse("l/a"), 2, 0), in, kT0));
  ASSERT_EQ(local.size(), 1u);
  EXPECT_EQ(local[0].face, app);
  EXPECT_EQ(local[0].interest.hopLimit, 0u);
}

TEST(NdnNode, StrategySelectsNextHops)
{
  Node node{NodeId{0}};
  auto in = node.addFace();
  auto a = node.addFace();
  auto b = node.addFace();
  node.registerPrefix(Name::parse("p"), a);
  node.registerPrefix(Name::parse("p"), b);

  auto best = only<SendInterest>(node.onInterest(makeInterest(Name::parse("p/1"), 1), in, kT0));
  ASSERT_EQ(best.size(), 1u);
  EXPECT_EQ(best[0].face, a);

  node.setStrategy(Strategy::Multicast);
  auto all = only<SendInterest>(node.onInterest(makeInterest(Name::parse("p/2"), 2), in, kT0));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].face, a);
  EXPECT_EQ(all[1].face, b);

  // Arrival face excluded from the multicast set.
  auto fromA = only<SendInterest>(node.onInterest(makeInterest(Name::parse("p/3"), 3), a, kT0));
  ASSERT_EQ(fromA.size(), 1u);
  EXPECT_EQ(fromA[0].face, b);

  node.setStrategy(Name::parse("p"), Strategy::BestRoute);
  EXPECT_EQ(node.strategyFor(Name::parse("p/4")), Strategy::BestRoute);
  EXPECT_EQ(node.strategyFor(Name::parse("q")), Strategy::Multicast);
}

TEST(NdnNode, ContentStoreHitAnswersWithoutTouchingPit)
{
  Relay r;
  r.node.contentStore().insert(makeData(r.name, "cached"), kT0);
  auto out = r.node.onInterest(makeInterest(r.name, 1), r.f2, kT0);
  auto data = only<SendData>(out);
  ASSERT_EQ(out.size(), 1u);
  ASSERT_EQ(data.size(), 1u);
  EXPECT_EQ(data[0].face, r.f2);
  EXPECT_EQ(data[0].data.payload, "cached");
  EXPECT_EQ(r.node.pit().size(), 0u);
}

TEST(NdnNode, SubscriptionAndBypassSkipContentStore)
{
  Relay r;
  r.node.contentStore().insert(makeData(r.name), kT0);
  auto sub = makeInterest(r.name, 1);
  sub.subscription = true;
  EXPECT_EQ(only<SendInterest>(r.node.onInterest(sub, r.f1, kT0)).size(), 1u);

  Relay r2;
  r2.node.contentStore().insert(makeData(r2.name), kT0);
  auto bypass = makeInterest(r2.name, 1);
  bypass.bypassCache = true;
  EXPECT_EQ(only<SendInterest>(r2.node.onInterest(bypass, r2.f1, kT0)).size(), 1u);
}

TEST(NdnNode, DataSatisfiesAllDownstreamsAndIsCached)
{
  Relay r;
  r.node.onInterest(makeInterest(r.name, 1), r.f1, kT0);
  r.node.onInterest(makeInterest(r.name, 2), r.f2, kT0);
  auto out = r.node.onData(makeData(r.name), r.up, kT0);
  auto sends = only<SendData>(out);
  ASSERT_EQ(sends.size(), 2u);
  EXPECT_EQ(sends[0].face, r.f1);
  EXPECT_EQ(sends[1].face, r.f2);
  EXPECT_EQ(r.node.pit().find(r.name), nullptr);
  EXPECT_TRUE(r.node.contentStore().contains(r.name));
}

TEST(NdnNode, UnsolicitedDataIsDroppedAndNotCached)
{
  Relay r;
  auto out = r.node.onData(makeData(r.name), r.up, kT0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(std::get<Drop>(out[0]).reason, DropReason::Unsolicited);
  EXPECT_EQ(r.node.contentStore().size(), 0u);
}

TEST(NdnNode, ExpiredEntryMakesDataUnsolicited)
{
  Relay r;
  auto i = makeInterest(r.name, 1);
  i.lifetime = sim::Duration{100};
  r.node.onInterest(i, r.f1, kT0);
  auto out = r.node.onData(makeData(r.name), r.up, sim::atMillis(101));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(std::get<Drop>(out[0]).reason, DropReason::Unsolicited);
}

TEST(NdnNode, SolicitCountKeepsEntryForSeveralData)
{
  Relay r;
  r.node.onInterest(makeInterest(r.name, 1, 8, 3), r.f1, kT0);
  for (int k = 1; k <= 3; ++k) {
    auto sends = only<SendData>(r.node.onData(makeData(r.name, std::to_string(k)), r.up, kT0));
    ASSERT_EQ(sends.size(), 1u) << "data #" << k;
    EXPECT_EQ(sends[0].data.payload, std::to_string(k));
    EXPECT_EQ(r.node.pit().find(r.name) == nullptr, k == 3);
  }
  auto extra = r.node.onData(makeData(r.name, "4"), r.up, kT0);
  EXPECT_EQ(std::get<Drop>(extra.at(0)).reason, DropReason::Unsolicited);
}

TEST(NdnNode, MixedSolicitCountsOweEachFaceItsOwnCount)
{
  Relay r;
  r.node.onInterest(makeInterest(r.name, 1, 8, 1), r.f1, kT0);
  r.node.onInterest(makeInterest(r.name, 2, 8, 2), r.f2, kT0);
  auto first = only<SendData>(r.node.onData(makeData(r.name), r.up, kT0));
  EXPECT_EQ(first.size(), 2u);
  auto second = only<SendData>(r.node.onData(makeData(r.name), r.up, kT0));
  ASSERT_EQ(second.size(), 1u);
  EXPECT_EQ(second[0].face, r.f2);
  EXPECT_EQ(r.node.pit().size(), 0u);
}

TEST(NdnNode, UnknownFaceAndZeroSolicitAreRejected)
{
  Relay r;
  FaceId bogus{99};
  EXPECT_EQ(errorOf([&] { r.node.onInterest(makeInterest(r.name, 1), bogus, kT0); }),
            Errc::UnknownFace);
  EXPECT_EQ(errorOf([&] { r.node.onData(makeData(r.name), bogus, kT0); }), Errc::UnknownFace);
  EXPECT_EQ(errorOf([&] { r.node.registerPrefix(r.name, bogus); }), Errc::UnknownFace);
  EXPECT_EQ(errorOf([&] { r.node.onInterest(makeInterest(r.name, 1, 8, 0), r.f1, kT0); }),
            Errc::InvalidArgument);
}

TEST(NdnNode, NonceMemoryIsBoundedFifo)
{
  NodeConfig config;
  config.nonceCapacity = 2;
  Node node{NodeId{0}, config};
  auto in = node.addFace();
  const auto n = Name::parse("x");
  for (std::uint64_t nonce : {1, 2, 3}) {
    node.onInterest(makeInterest(n, nonce), in, kT0);
  }
  EXPECT_FALSE(node.hasSeenNonce(n, 1));
  EXPECT_TRUE(node.hasSeenNonce(n, 2));
  EXPECT_TRUE(node.hasSeenNonce(n, 3));
  EXPECT_FALSE(node.hasSeenNonce(Name::parse("y"), 3));
}

TEST(NdnFib, RegistrationIsIdempotentAndLongestMatchWins)
{
  Node node{NodeId{0}};
  auto a = node.addFace();
  auto b = node.addFace();
  node.registerPrefix(Name::parse("p"), a);
  node.registerPrefix(Name::parse("p"), a);
  node.registerPrefix(Name::parse("p/q"), b);
  EXPECT_EQ(node.fib().size(), 2u);
  EXPECT_EQ(node.fib().findExactMatch(Name::parse("p"))->nextHops, std::vector<FaceId>{a});

  auto deep = node.fib().findLongestPrefixMatch(Name::parse("p/q/r"));
  ASSERT_TRUE(deep);
  EXPECT_EQ(deep->value.nextHops, std::vector<FaceId>{b});
  auto shallow = node.fib().findLongestPrefixMatch(Name::parse("p/z"));
  ASSERT_TRUE(shallow);
  EXPECT_EQ(shallow->value.nextHops, std::vector<FaceId>{a});
  EXPECT_FALSE(node.fib().findLongestPrefixMatch(Name::parse("z")));
}

TEST(NdnPit, ExpireOnEmptyTable)
{
  Pit pit;
  EXPECT_EQ(pit.expire(sim::atMillis(1000)), 0u);
}

TEST(NdnPit, ExpireIsStrictlyAfterDeadline)
{
  Pit pit;
  pit.insert(Name::parse("a"), sim::atMillis(100));
  EXPECT_EQ(pit.expire(sim::atMillis(100)), 0u);
  EXPECT_EQ(pit.expire(sim::atMillis(101)), 1u);
  EXPECT_EQ(pit.size(), 0u);
}

TEST(NdnPit, ExpireMatchesFilterOracle)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Pit pit;
    std::map<Name, std::int64_t> model;
    std::uniform_int_distribution<std::int64_t> when(0, 1000);
    for (int k = 0; k < 40; ++k) {
      auto name = test::randomName(rng, 3);
      auto t = when(rng);
      if (model.emplace(name, t).second) {
        pit.insert(name, sim::atMillis(t));
      }
    }
    auto now = when(rng);
    auto expected = std::count_if(model.begin(), model.end(),
                                  [now] (const auto& kv) { return kv.second < now; });
    EXPECT_EQ(pit.expire(sim::atMillis(now)), static_cast<std::size_t>(expected));
    std::erase_if(model, [now] (const auto& kv) { return kv.second < now; });
    ASSERT_EQ(pit.size(), model.size());
    for (const auto& [name, t] : model) {
      ASSERT_NE(pit.find(name), nullptr);
      EXPECT_EQ(sim::toMillis(pit.find(name)->expiry()), t);
    }
  }
}

TEST(NdnNetwork, SuppressionSendsOneUpstreamInterestForManyConsumers)
{
  for (std::size_t k : {2u, 5u, 16u}) {
    test::NdnWire wire;
    auto relay = wire.addNode();
    auto producer = wire.addNode();
    auto [relayUp, producerDown] = wire.link(relay, producer);
    auto producerApp = wire.addApp(producer);
    wire.node(relay).registerPrefix(Name::parse("p"), relayUp);
    wire.node(producer).registerPrefix(Name::parse("p"), producerApp);

    std::vector<std::size_t> consumers;
    for (std::size_t c = 0; c < k; ++c) {
      auto consumer = wire.addNode();
      auto [down, toRelay] = wire.link(consumer, relay);
      (void)toRelay;
      auto app = wire.addApp(consumer);
      wire.node(consumer).registerPrefix(Name::parse("p"), down);
      wire.inject(consumer, app, makeInterest(Name::parse("p/x"), 100 + c));
      consumers.push_back(consumer);
    }
    wire.run();
    EXPECT_EQ(wire.interestsSent(relay, producer), 1u);
    ASSERT_EQ(wire.appDeliveries().size(), 1u); // Interest at the producer app

    wire.inject(producer, producerApp, makeData(Name::parse("p/x")));
    wire.run();
    EXPECT_EQ(wire.dataSent(producer, relay), 1u);
    for (auto consumer : consumers) {
      EXPECT_EQ(wire.dataSent(relay, consumer), 1u);
    }
    std::size_t dataAtApps = 0;
    for (const auto& d : wire.appDeliveries()) {
      dataAtApps += std::holds_alternative<Data>(d.packet);
    }
    EXPECT_EQ(dataAtApps, k);
  }
}

TEST(NdnNetwork, LineTopologyMatchesPathWalk)
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    constexpr std::size_t kNodes = 10;
    test::NdnWire wire;
    for (std::size_t i = 0; i < kNodes; ++i) {
      wire.addNode();
    }
    std::vector<std::size_t> order(kNodes);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const auto prefix = Name::parse("prod");
    std::map<std::pair<std::size_t, FaceId>, std::size_t> neighbor;
    for (std::size_t i = 0; i + 1 < kNodes; ++i) {
      auto [fwd, back] = wire.link(order[i], order[i + 1]);
      wire.node(order[i]).registerPrefix(prefix, fwd);
      neighbor[{order[i], fwd}] = order[i + 1];
      neighbor[{order[i + 1], back}] = order[i];
    }
    auto producerApp = wire.addApp(order.back());
    wire.node(order.back()).registerPrefix(prefix, producerApp);
    auto consumerApp = wire.addApp(order.front());

    // Oracle: follow the first FIB next hop until a face without a peer.
    std::vector<std::size_t> walk{order.front()};
    while (true) {
      auto hop = wire.node(walk.back()).fib().findLongestPrefixMatch(prefix);
      ASSERT_TRUE(hop);
      auto it = neighbor.find({walk.back(), hop->value.nextHops.front()});
      if (it == neighbor.end()) {
        break;
      }
      walk.push_back(it->second);
    }
    ASSERT_EQ(walk.size(), kNodes);

    wire.inject(order.front(), consumerApp, makeInterest(Name::parse("prod/v"), 1, 32));
    wire.run();
    wire.inject(order.back(), producerApp, makeData(Name::parse("prod/v")));
    wire.run();

    std::size_t interests = 0;
    std::size_t data = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      EXPECT_EQ(wire.interestsSent(walk[i], walk[i + 1]), 1u);
      EXPECT_EQ(wire.dataSent(walk[i + 1], walk[i]), 1u);
      interests += wire.interestsSent(walk[i], walk[i + 1]);
      data += wire.dataSent(walk[i + 1], walk[i]);
    }
    EXPECT_EQ(interests, kNodes - 1);
    EXPECT_EQ(data, kNodes - 1);
    ASSERT_EQ(wire.appDeliveries().size(), 2u);
    EXPECT_EQ(wire.appDeliveries().back().node, order.front());
    EXPECT_TRUE(std::holds_alternative<Data>(wire.appDeliveries().back().packet));
    for (std::size_t i = 0; i < kNodes; ++i) {
      EXPECT_EQ(wire.node(i).pit().size(), 0u);
    }
  }
}

// Random Interest/Data sequences at one relay: a face never receives more
// Data than it solicited, and Data only goes to faces that asked.
TEST(NdnNodeProperty, DataNeverExceedsSolicitation)
{
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Node node{NodeId{0}};
    std::vector<FaceId> downs{node.addFace(), node.addFace(), node.addFace()};
    auto up = node.addFace();
    node.registerPrefix(Name::parse("p"), up);
    const auto name = Name::parse("p/v");
    std::map<FaceId, std::uint64_t> solicited;
    std::map<FaceId, std::uint64_t> received;
    std::uint64_t nonce = 1;
    std::uniform_int_distribution<int> op(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, downs.size() - 1);
    std::uniform_int_distribution<std::uint32_t> count(1, 4);
    for (int step = 0; step < 60; ++step) {
      if (op(rng) == 0) {
        auto face = downs[pick(rng)];
        auto k = count(rng);
        auto out = node.onInterest(makeInterest(name, nonce++, 8, k), face, kT0);
        solicited[face] += k;
        // A Content Store hit answers the new Interest on its arrival face.
        for (const auto& s : only<SendData>(out)) {
          ASSERT_EQ(s.face, face);
          ++received[s.face];
        }
      }
      else {
        auto out = node.onData(makeData(name), up, kT0);
        std::set<FaceId> seen;
        for (const auto& s : only<SendData>(out)) {
          EXPECT_TRUE(seen.insert(s.face).second) << "two copies to one face";
          ++received[s.face];
        }
      }
      for (auto face : downs) {
        ASSERT_LE(received[face], solicited[face]);
      }
    }
  }
}

// Re-injecting any previously seen (name, nonce) never produces traffic.
TEST(NdnNodeProperty, SeenNonceNeverForwards)
{
  std::mt19937_64 rng(29);
  Node node{NodeId{0}};
  node.setStrategy(Strategy::Multicast);
  std::vector<FaceId> faces{node.addFace(), node.addFace(), node.addFace(), node.addFace()};
  for (auto f : faces) {
    node.registerPrefix(Name::parse("a"), f);
  }
  std::vector<Interest> sent;
  std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
  for (std::uint64_t nonce = 1; nonce <= 200; ++nonce) {
    auto i = makeInterest(Name{"a", std::to_string(nonce % 7)}, nonce);
    node.onInterest(i, faces[pick(rng)], kT0);
    sent.push_back(i);
  }
  for (const auto& i : sent) {
    auto out = node.onInterest(i, faces[pick(rng)], kT0);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(std::get<Drop>(out[0]).reason, DropReason::Loop);
  }
}

} // namespace
} // namespace oscl::ndn
