// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_SCL_RESOURCE_TREE_HPP
#define OSCL_SCL_RESOURCE_TREE_HPP

#include "oscl/ids.hpp"
#include "oscl/names/name.hpp"
#include "oscl/sim/clock.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oscl::scl {

inline constexpr std::string_view kApplications = "applications";
inline constexpr std::string_view kContainers = "containers";
inline constexpr std::string_view kContentInstances = "content_instances";
inline constexpr std::string_view kLatest = "latest";
inline constexpr std::string_view kOldest = "oldest";

/// Network address of an SCL instance. Simulated; only used to set up links.
struct Locator
{
  NodeId node;
  std::string host;
  std::uint16_t port = 0;

  bool
  operator==(const Locator&) const = default;
};

enum class SubscriptionMode {
  Centralized,
  P2p,
};

struct Subscription
{
  std::uint64_t id = 0;
  Locator subscriber;
  Name target;
  SubscriptionMode mode;
  /// Overlay nodes from subscriber to target; present iff mode is P2p.
  std::optional<std::vector<NodeId>> deliveryPath;
  bool active = true;
};

struct ContentInstance
{
  std::uint64_t index;
  std::string payload;
  sim::Time createdAt;
};

class Container
{
public:
  explicit
  Container(std::string name)
    : m_name(std::move(name))
  {
  }

  const std::string&
  name() const noexcept
  {
    return m_name;
  }

  std::span<const ContentInstance>
  instances() const noexcept
  {
    return m_instances;
  }

  const ContentInstance&
  append(std::string payload, sim::Time now);

  const ContentInstance&
  latest() const;

  const ContentInstance&
  oldest() const;

  const ContentInstance&
  at(std::uint64_t index) const;

  std::vector<Subscription>&
  subscriptions() noexcept
  {
    return m_subscriptions;
  }

  const std::vector<Subscription>&
  subscriptions() const noexcept
  {
    return m_subscriptions;
  }

private:
  std::string m_name;
  std::vector<ContentInstance> m_instances; // append-only
  std::vector<Subscription> m_subscriptions;
};

enum class ResourceKind {
  Scl,
  Application,
  Container,
  ContentInstance,
};

/// What a resource name points at inside one tree.
struct ResourceRef
{
  ResourceKind kind;
  std::string application;
  std::string container;
  std::optional<std::uint64_t> instance;
};

/**
 * Resources of one SCL instance:
 *
 *   <base>/applications/<app>/containers/<container>/content_instances/<i|latest|oldest>
 */
class ResourceTree
{
public:
  explicit
  ResourceTree(Name baseName)
    : m_base(std::move(baseName))
  {
  }

  const Name&
  baseName() const noexcept
  {
    return m_base;
  }

  void
  createApplication(std::string_view app);

  void
  createContainer(std::string_view app, std::string_view container);

  bool
  hasApplication(std::string_view app) const;

  Container&
  container(std::string_view app, std::string_view container);

  const Container&
  container(std::string_view app, std::string_view container) const;

  /// Resolves a full resource name. Throws NotFound for unknown paths and
  /// EmptyContainer for latest/oldest on an empty container.
  ResourceRef
  resolve(const Name& name) const;

  /// Payload of the content instance `name` addresses.
  const std::string&
  read(const Name& name) const;

  Name
  applicationName(std::string_view app) const;

  Name
  containerName(std::string_view app, std::string_view container) const;

  template<typename Fn>
  void
  forEachContainer(Fn&& fn) const
  {
    for (const auto& [app, containers] : m_apps) {
      for (const auto& [name, c] : containers) {
        fn(app, c);
      }
    }
  }

private:
  using Application = std::map<std::string, Container, std::less<>>;

  Name m_base;
  std::map<std::string, Application, std::less<>> m_apps;
};

} // namespace oscl::scl

#endif // OSCL_SCL_RESOURCE_TREE_HPP
