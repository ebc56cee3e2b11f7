// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/names/name.hpp"

#include "oscl/error.hpp"

#include <algorithm>
#include <ostream>

namespace oscl {

NameComponent::NameComponent(std::string label)
  : m_label(std::move(label))
{
  if (m_label.empty()) {
    throw Error(Errc::EmptyComponent, "name component must not be empty");
  }
  if (m_label.find('/') != std::string::npos) {
    throw Error(Errc::InvalidArgument, "name component '" + m_label + "' contains '/'");
  }
}

Name
Name::parse(std::string_view text)
{
  if (!text.empty() && text.front() == '/') {
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw Error(Errc::EmptyName, "name has no components");
  }

  std::vector<NameComponent> components;
  std::size_t start = 0;
  while (true) {
    auto slash = text.find('/', start);
    auto segment = text.substr(start, slash == std::string_view::npos ? slash : slash - start);
    if (segment.empty()) {
      throw Error(Errc::EmptyComponent, "empty component in '" + std::string(text) + "'");
    }
    components.emplace_back(std::string(segment));
    if (slash == std::string_view::npos) {
      break;
    }
    start = slash + 1;
  }
  return Name(std::move(components));
}

Name::Name(std::vector<NameComponent> components)
  : m_components(std::move(components))
{
  if (m_components.empty()) {
    throw Error(Errc::EmptyName, "name has no components");
  }
}

Name::Name(std::initializer_list<std::string_view> labels)
{
  m_components.reserve(labels.size());
  for (auto label : labels) {
    m_components.emplace_back(std::string(label));
  }
  if (m_components.empty()) {
    throw Error(Errc::EmptyName, "name has no components");
  }
}

std::string
Name::toUri() const
{
  std::string out;
  for (const auto& c : m_components) {
    if (!out.empty()) {
      out += '/';
    }
    out += c.str();
  }
  return out;
}

bool
Name::isPrefixOf(const Name& other) const noexcept
{
  return size() <= other.size() &&
         std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

Name
Name::getPrefix(std::size_t n) const
{
  if (n == 0 || n > size()) {
    throw Error(Errc::InvalidArgument, "prefix length out of range");
  }
  return Name(std::vector<NameComponent>(m_components.begin(), m_components.begin() + n));
}

Name
Name::append(std::string_view label) const
{
  auto components = m_components;
  components.emplace_back(std::string(label));
  return Name(std::move(components));
}

Name
Name::append(const Name& suffix) const
{
  auto components = m_components;
  components.insert(components.end(), suffix.m_components.begin(), suffix.m_components.end());
  return Name(std::move(components));
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

} // namespace oscl

std::size_t
std::hash<oscl::Name>::operator()(const oscl::Name& name) const noexcept
{
  std::size_t seed = name.size();
  for (const auto& c : name) {
    seed ^= std::hash<std::string>{}(c.str()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
