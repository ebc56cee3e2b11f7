// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NAMES_NAME_HPP
#define OSCL_NAMES_NAME_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oscl {

/// One segment of a hierarchical name. Never empty, never contains '/'.
class NameComponent
{
public:
  explicit
  NameComponent(std::string label);

  const std::string&
  str() const noexcept
  {
    return m_label;
  }

  friend auto operator<=>(const NameComponent&, const NameComponent&) = default;

private:
  std::string m_label;
};

/**
 * Hierarchical name shared by M2M resource paths and named-data packets,
 * e.g. "Gscl1/applications/meter_app/containers/meter_data".
 *
 * A name always has at least one component. Ordering is lexicographic over
 * components, so names can key ordered tables deterministically.
 */
class Name
{
public:
  /// Parses the '/'-separated textual form. One leading '/' is accepted and
  /// dropped, so "/a/b" and "a/b" are the same name.
  static Name
  parse(std::string_view text);

  explicit
  Name(std::vector<NameComponent> components);

  Name(std::initializer_list<std::string_view> labels);

  std::size_t
  size() const noexcept
  {
    return m_components.size();
  }

  const NameComponent&
  operator[](std::size_t i) const
  {
    return m_components[i];
  }

  const NameComponent&
  back() const
  {
    return m_components.back();
  }

  std::span<const NameComponent>
  components() const noexcept
  {
    return m_components;
  }

  auto
  begin() const noexcept
  {
    return m_components.begin();
  }

  auto
  end() const noexcept
  {
    return m_components.end();
  }

  std::string
  toUri() const;

  /// True iff this name's components are a leading run of `other`'s.
  bool
  isPrefixOf(const Name& other) const noexcept;

  /// First `n` components; 1 <= n <= size().
  Name
  getPrefix(std::size_t n) const;

  Name
  append(std::string_view label) const;

  Name
  append(const Name& suffix) const;

  friend auto operator<=>(const Name&, const Name&) = default;

private:
  std::vector<NameComponent> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

} // namespace oscl

template<>
struct std::hash<oscl::Name>
{
  std::size_t
  operator()(const oscl::Name& name) const noexcept;
};

#endif // OSCL_NAMES_NAME_HPP
