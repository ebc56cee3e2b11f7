// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/harness/scenario.hpp"

#include "oscl/error.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace oscl::harness {

ScenarioTopology
usecase1Topology()
{
  ScenarioTopology t;
  t.nodes = {{"Nscl", scl::SclKind::Nscl},
             {"Gscl1", scl::SclKind::Gscl},
             {"Dscl1", scl::SclKind::Dscl}};
  t.producer = "Gscl1";
  t.subscriber = "Dscl1";
  return t;
}

ScenarioTopology
usecase2Topology()
{
  ScenarioTopology t;
  t.nodes = {{"Nscl", scl::SclKind::Nscl},
             {"Gscl1", scl::SclKind::Gscl},
             {"Gscl2", scl::SclKind::Gscl},
             {"Gscl3", scl::SclKind::Gscl},
             {"Dscl1", scl::SclKind::Dscl}};
  t.links = {{"Dscl1", "Gscl3", {}}, {"Gscl3", "Gscl2", {}}, {"Gscl2", "Gscl1", {}}};
  t.routes = {{"Dscl1", "/Gscl1", "Gscl3"},
              {"Gscl3", "/Gscl1", "Gscl2"},
              {"Gscl2", "/Gscl1", "Gscl1"}};
  t.producer = "Gscl1";
  t.subscriber = "Dscl1";
  return t;
}

namespace {

double
parseDouble(std::string_view text, std::size_t line)
{
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::InvalidArgument, "topology line " + std::to_string(line) +
                                         ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

} // namespace

ScenarioTopology
parseTopology(std::istream& is)
{
  ScenarioTopology t;
  t.nodes.clear();
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(is, raw)) {
    ++lineNo;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream tokens(raw);
    std::vector<std::pair<std::string, std::string>> kv;
    for (std::string tok; tokens >> tok;) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Error(Errc::InvalidArgument, "topology line " + std::to_string(lineNo) +
                                             ": expected key=value, got '" + tok + "'");
      }
      kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    if (kv.empty()) {
      continue;
    }
    auto bad = [lineNo] (const std::string& what) {
      return Error(Errc::InvalidArgument, "topology line " + std::to_string(lineNo) + ": " + what);
    };
    const auto& [head, value] = kv.front();
    std::map<std::string, std::string> opts(kv.begin() + 1, kv.end());
    auto take = [&] (const std::string& key) -> std::optional<std::string> {
      auto it = opts.find(key);
      if (it == opts.end()) {
        return std::nullopt;
      }
      auto v = it->second;
      opts.erase(it);
      return v;
    };

    if (head == "node") {
      auto kind = take("kind");
      if (!kind) {
        throw bad("node needs kind=nscl|gscl|dscl");
      }
      try {
        t.nodes.push_back({value, scl::parseSclKind(*kind)});
      }
      catch (const Error& e) {
        throw bad(e.what());
      }
    }
    else if (head == "link") {
      auto comma = value.find(',');
      if (comma == std::string::npos) {
        throw bad("link needs two endpoints: link=A,B");
      }
      LinkSpec link{value.substr(0, comma), value.substr(comma + 1), {}};
      if (auto v = take("delay")) {
        link.metrics.delayMs = parseDouble(*v, lineNo);
      }
      if (auto v = take("loss")) {
        link.metrics.loss = parseDouble(*v, lineNo);
      }
      if (auto v = take("capacity")) {
        link.metrics.capacity = parseDouble(*v, lineNo);
      }
      t.links.push_back(std::move(link));
    }
    else if (head == "route") {
      auto prefix = take("prefix");
      auto via = take("via");
      if (!prefix || !via) {
        throw bad("route needs prefix= and via=");
      }
      t.routes.push_back({value, *prefix, *via});
    }
    else if (head == "producer") {
      t.producer = value;
      if (auto v = take("app")) {
        t.application = *v;
      }
      if (auto v = take("container")) {
        t.container = *v;
      }
    }
    else if (head == "subscriber") {
      t.subscriber = value;
    }
    else {
      throw bad("unknown record '" + head + "'");
    }
    if (!opts.empty()) {
      throw bad("unknown key '" + opts.begin()->first + "'");
    }
  }
  if (t.producer.empty() || t.subscriber.empty()) {
    throw Error(Errc::InvalidArgument, "topology needs a producer= and a subscriber= record");
  }
  return t;
}

ScenarioTopology
loadTopology(const std::filesystem::path& file)
{
  std::ifstream is(file);
  if (!is) {
    throw Error(Errc::InvalidArgument, "cannot open topology file " + file.string());
  }
  return parseTopology(is);
}

ScenarioRun
runScenario(const ScenarioTopology& topology, const ScenarioConfig& config)
{
  if (config.appends < 1) {
    throw Error(Errc::InvalidArgument, "appends must be >= 1 (got 0)");
  }
  config.policy.validate();

  auto system = std::make_unique<scl::M2mSystem>();
  auto& sys = *system;
  std::map<std::string, NodeId> ids;
  for (const auto& node : topology.nodes) {
    ids[node.name] = sys.addScl(node.kind, node.name);
  }
  auto lookup = [&ids] (const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) {
      throw Error(Errc::InvalidArgument, "topology names unknown node '" + name + "'");
    }
    return it->second;
  };
  NodeId nscl;
  try {
    nscl = sys.nscl();
  }
  catch (const Error&) {
    throw Error(Errc::InvalidArgument, "topology needs exactly one NSCL");
  }
  const NodeId producer = lookup(topology.producer);
  const NodeId subscriber = lookup(topology.subscriber);
  if (producer == nscl || subscriber == nscl) {
    throw Error(Errc::InvalidArgument, "producer and subscriber must not be the NSCL");
  }

  for (const auto& [name, id] : ids) {
    if (id != nscl) {
      sys.registerScl(id, nscl);
    }
  }
  sys.createApplication(producer, topology.application);
  sys.createContainer(producer, topology.application, topology.container);
  const Name target =
    sys.scl(producer).tree().containerName(topology.application, topology.container);

  const auto scope = config.policy.maxPathHops;
  std::unique_ptr<overlay::Oscl> ovl;
  std::optional<scl::DiscoveryResult> discovery;
  std::optional<overlay::QosMetrics> qos;
  std::optional<overlay::LinkDecision> link;
  std::size_t linksCreated = 0;
  std::optional<scl::Subscription> subscription;
  if (config.oscl) {
    overlay::OsclConfig oc;
    oc.seed = config.seed;
    ovl = std::make_unique<overlay::Oscl>(sys, oc);
    ovl->attachAll();
    for (const auto& l : topology.links) {
      ovl->connect(lookup(l.a), lookup(l.b), l.metrics);
    }
    for (const auto& route : topology.routes) {
      ovl->addRoute(lookup(route.at), Name::parse(route.prefix), lookup(route.via));
    }

    discovery = ovl->discover(subscriber, target, scope, nscl);
    if (discovery->path && discovery->path->size() > 1) {
      qos = ovl->monitorPath(*discovery->path, config.probes);
    }
    const auto before = ovl->graph().edgeCount();
    link = ovl->ensureLink(subscriber, *discovery, config.policy, qos);
    linksCreated = ovl->graph().edgeCount() - before;
    subscription = ovl->subscribe(subscriber, target, config.appends, scope);
  }
  else {
    discovery = sys.centralizedDiscover(subscriber, nscl, target);
    subscription = sys.subscribeCentralized(subscriber, nscl, target);
  }

  for (std::uint32_t i = 1; i <= config.appends; ++i) {
    sys.scheduler().scheduleAfter(config.appendInterval * i, [&sys, producer, &topology, i] {
      sys.createContentInstance(producer, topology.application, topology.container,
                                "reading-" + std::to_string(i));
    });
  }
  sys.scheduler().runFor(config.appendInterval * config.appends + ndn::kDefaultInterestLifetime);

  const auto delivered =
    config.oscl ? ovl->delivered(subscription->id)
                : sys.counters().get(subscriber, scl::MsgType::Notify, scl::Role::Received);
  return ScenarioRun{std::move(system), std::move(ovl), nscl, producer, subscriber, target,
                     std::move(*discovery), qos, link, linksCreated, std::move(*subscription),
                     delivered};
}

} // namespace oscl::harness
