// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/scl/scl_instance.hpp"

#include "oscl/error.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace oscl::scl {

std::string_view
toString(SclKind kind) noexcept
{
  switch (kind) {
    case SclKind::Nscl: return "NSCL";
    case SclKind::Gscl: return "GSCL";
    case SclKind::Dscl: return "DSCL";
  }
  return "unknown";
}

SclKind
parseSclKind(std::string_view text)
{
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [] (unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "nscl") {
    return SclKind::Nscl;
  }
  if (lower == "gscl") {
    return SclKind::Gscl;
  }
  if (lower == "dscl") {
    return SclKind::Dscl;
  }
  throw Error(Errc::InvalidArgument, "unknown SCL kind '" + std::string(text) + "'");
}

SclInstance::SclInstance(NodeId id, SclKind kind, Name baseName, Locator locator,
                         ndn::NodeConfig forwarding)
  : m_id(id)
  , m_kind(kind)
  , m_tree(std::move(baseName))
  , m_locator(std::move(locator))
  , m_forwarder(id, forwarding)
{
  if (m_locator.port == 0) {
    throw Error(Errc::InvalidArgument, "locator port must be in 1..65535");
  }
  [[maybe_unused]] auto consumer = m_forwarder.addFace(ndn::FaceScope::Local);
  [[maybe_unused]] auto producer = m_forwarder.addFace(ndn::FaceScope::Local);
  m_forwarder.registerPrefix(m_tree.baseName(), kProducerFace);
}

} // namespace oscl::scl
