// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_HARNESS_SCENARIO_HPP
#define OSCL_HARNESS_SCENARIO_HPP

#include "oscl/overlay/oscl.hpp"
#include "oscl/scl/m2m_system.hpp"

#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace oscl::harness {

struct NodeSpec
{
  std::string name;
  scl::SclKind kind;
};

struct LinkSpec
{
  std::string a;
  std::string b;
  overlay::LinkMetrics metrics;
};

struct RouteSpec
{
  std::string at;
  std::string prefix;
  std::string via;
};

/// Deployment of one scenario. Links and routes only matter with the overlay on.
struct ScenarioTopology
{
  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;
  std::vector<RouteSpec> routes;
  std::string producer;
  std::string application = "electricity_meter";
  std::string container = "meter_data";
  std::string subscriber;
};

/// One NSCL, Gscl1 hosting the meter and a monitoring Dscl1.
ScenarioTopology
usecase1Topology();

/// One NSCL, three GSCLs and Dscl1, with the overlay chain
/// Dscl1 - Gscl3 - Gscl2 - Gscl1 and routes towards Gscl1.
ScenarioTopology
usecase2Topology();

/**
 * Parses a topology description: one record per line, whitespace-separated
 * key=value tokens, '#' starts a comment.
 *
 *   node=Gscl1 kind=gscl
 *   link=Dscl1,Gscl1 delay=10 loss=0 capacity=100
 *   route=Dscl1 prefix=/Gscl1 via=Gscl1
 *   producer=Gscl1 app=electricity_meter container=meter_data
 *   subscriber=Dscl1
 *
 * Throws Error(InvalidArgument) naming the offending line.
 */
ScenarioTopology
parseTopology(std::istream& is);

ScenarioTopology
loadTopology(const std::filesystem::path& file);

struct ScenarioConfig
{
  bool oscl = true;
  std::uint32_t appends = 5;
  overlay::QosPolicy policy{};
  std::uint64_t seed = 1;
  std::uint64_t probes = 100;
  sim::Duration appendInterval{100};
};

/// State after a scenario ran to completion.
struct ScenarioRun
{
  std::unique_ptr<scl::M2mSystem> system;
  /// Null with the overlay off. Declared after `system` so it is destroyed first.
  std::unique_ptr<overlay::Oscl> overlay;
  NodeId nscl;
  NodeId producer;
  NodeId subscriber;
  Name target;
  scl::DiscoveryResult discovery;
  std::optional<overlay::QosMetrics> qos;
  std::optional<overlay::LinkDecision> link;
  std::size_t linksCreatedByPolicy = 0;
  scl::Subscription subscription;
  std::uint64_t notificationsDelivered = 0;
};

/**
 * Registration, container creation, discovery, subscription, then one
 * content instance per append interval. Overlay on: distributed discovery
 * with fallback, path monitoring, link policy and a peer-to-peer
 * subscription. Overlay off: the NSCL-mediated procedures.
 */
ScenarioRun
runScenario(const ScenarioTopology& topology, const ScenarioConfig& config);

} // namespace oscl::harness

#endif // OSCL_HARNESS_SCENARIO_HPP
