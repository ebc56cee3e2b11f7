// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/error.hpp"

namespace oscl {

const char*
toString(Errc code) noexcept
{
  switch (code) {
    case Errc::EmptyName: return "EmptyName";
    case Errc::EmptyComponent: return "EmptyComponent";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::AlreadyRegistered: return "AlreadyRegistered";
    case Errc::NotRegistered: return "NotRegistered";
    case Errc::NotAnNscl: return "NotAnNscl";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::MissingParent: return "MissingParent";
    case Errc::NotFound: return "NotFound";
    case Errc::EmptyContainer: return "EmptyContainer";
    case Errc::BrokenPath: return "BrokenPath";
    case Errc::NoPath: return "NoPath";
    case Errc::DomainError: return "DomainError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
  : std::runtime_error(std::string(toString(code)) + ": " + what)
  , m_code(code)
{
}

} // namespace oscl
