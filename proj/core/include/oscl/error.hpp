// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_ERROR_HPP
#define OSCL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace oscl {

enum class Errc {
  EmptyName,
  EmptyComponent,
  InvalidArgument,
  UnknownFace,
  UnknownNode,
  AlreadyRegistered,
  NotRegistered,
  NotAnNscl,
  DuplicateName,
  MissingParent,
  NotFound,
  EmptyContainer,
  BrokenPath,
  NoPath,
  DomainError,
};

const char*
toString(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers can branch on the category without parsing messages.
class Error : public std::runtime_error
{
public:
  Error(Errc code, const std::string& what);

  Errc
  code() const noexcept
  {
    return m_code;
  }

private:
  Errc m_code;
};

} // namespace oscl

#endif // OSCL_ERROR_HPP
