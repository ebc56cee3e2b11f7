// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_SCL_SCL_INSTANCE_HPP
#define OSCL_SCL_SCL_INSTANCE_HPP

#include "oscl/ndn/node.hpp"
#include "oscl/scl/resource_tree.hpp"

#include <map>
#include <string_view>

namespace oscl::scl {

enum class SclKind {
  Nscl,
  Gscl,
  Dscl,
};

std::string_view
toString(SclKind kind) noexcept;

SclKind
parseSclKind(std::string_view text);

/// Applications hosted by an SCL talk to its forwarder over two local faces:
/// requests leave through the consumer face, answers enter through the
/// producer face. Overlay faces are allocated after these.
inline constexpr FaceId kConsumerFace{0};
inline constexpr FaceId kProducerFace{1};

/// One NSCL, GSCL or DSCL: a resource tree plus the embedded forwarder.
class SclInstance
{
public:
  SclInstance(NodeId id, SclKind kind, Name baseName, Locator locator,
              ndn::NodeConfig forwarding = {});

  NodeId
  id() const noexcept
  {
    return m_id;
  }

  SclKind
  kind() const noexcept
  {
    return m_kind;
  }

  const Name&
  baseName() const noexcept
  {
    return m_tree.baseName();
  }

  const Locator&
  locator() const noexcept
  {
    return m_locator;
  }

  bool
  registered() const noexcept
  {
    return m_registered;
  }

  ResourceTree&
  tree() noexcept
  {
    return m_tree;
  }

  const ResourceTree&
  tree() const noexcept
  {
    return m_tree;
  }

  ndn::Node&
  forwarder() noexcept
  {
    return m_forwarder;
  }

  const ndn::Node&
  forwarder() const noexcept
  {
    return m_forwarder;
  }

  /// True iff `name` lies under this instance's base name.
  bool
  owns(const Name& name) const noexcept
  {
    return baseName().isPrefixOf(name);
  }

  /// Base name -> locator of every registered SCL. Only populated on the NSCL.
  const std::map<Name, Locator>&
  registry() const noexcept
  {
    return m_registry;
  }

private:
  friend class M2mSystem;

  NodeId m_id;
  SclKind m_kind;
  ResourceTree m_tree;
  Locator m_locator;
  bool m_registered = false;
  ndn::Node m_forwarder;
  std::map<Name, Locator> m_registry;
};

} // namespace oscl::scl

#endif // OSCL_SCL_SCL_INSTANCE_HPP
