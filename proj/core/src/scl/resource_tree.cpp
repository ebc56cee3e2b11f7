// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/scl/resource_tree.hpp"

#include "oscl/error.hpp"

#include <charconv>

namespace oscl::scl {

const ContentInstance&
Container::append(std::string payload, sim::Time now)
{
  m_instances.push_back({m_instances.size(), std::move(payload), now});
  return m_instances.back();
}

const ContentInstance&
Container::latest() const
{
  if (m_instances.empty()) {
    throw Error(Errc::EmptyContainer, "container '" + m_name + "' has no content instances");
  }
  return m_instances.back();
}

const ContentInstance&
Container::oldest() const
{
  if (m_instances.empty()) {
    throw Error(Errc::EmptyContainer, "container '" + m_name + "' has no content instances");
  }
  return m_instances.front();
}

const ContentInstance&
Container::at(std::uint64_t index) const
{
  if (index >= m_instances.size()) {
    throw Error(Errc::NotFound, "container '" + m_name + "' has no instance " + std::to_string(index));
  }
  return m_instances[index];
}

void
ResourceTree::createApplication(std::string_view app)
{
  NameComponent label{std::string(app)}; // validates the label
  if (!m_apps.try_emplace(label.str()).second) {
    throw Error(Errc::DuplicateName, "application '" + label.str() + "' already exists");
  }
}

void
ResourceTree::createContainer(std::string_view app, std::string_view container)
{
  auto it = m_apps.find(app);
  if (it == m_apps.end()) {
    throw Error(Errc::MissingParent, "application '" + std::string(app) + "' does not exist");
  }
  NameComponent label{std::string(container)};
  if (!it->second.try_emplace(label.str(), label.str()).second) {
    throw Error(Errc::DuplicateName, "container '" + label.str() + "' already exists");
  }
}

bool
ResourceTree::hasApplication(std::string_view app) const
{
  return m_apps.find(app) != m_apps.end();
}

Container&
ResourceTree::container(std::string_view app, std::string_view container)
{
  return const_cast<Container&>(std::as_const(*this).container(app, container));
}

const Container&
ResourceTree::container(std::string_view app, std::string_view container) const
{
  auto a = m_apps.find(app);
  if (a == m_apps.end()) {
    throw Error(Errc::MissingParent, "application '" + std::string(app) + "' does not exist");
  }
  auto c = a->second.find(container);
  if (c == a->second.end()) {
    throw Error(Errc::MissingParent, "container '" + std::string(container) + "' does not exist");
  }
  return c->second;
}

ResourceRef
ResourceTree::resolve(const Name& name) const
{
  auto notFound = [&name] {
    return Error(Errc::NotFound, "no resource named '" + name.toUri() + "'");
  };
  if (!m_base.isPrefixOf(name)) {
    throw notFound();
  }
  const auto rest = name.components().subspan(m_base.size());
  if (rest.empty()) {
    return {ResourceKind::Scl, {}, {}, std::nullopt};
  }
  if (rest.size() < 2 || rest[0].str() != kApplications) {
    throw notFound();
  }
  auto app = m_apps.find(rest[1].str());
  if (app == m_apps.end()) {
    throw notFound();
  }
  if (rest.size() == 2) {
    return {ResourceKind::Application, app->first, {}, std::nullopt};
  }
  if (rest.size() < 4 || rest[2].str() != kContainers) {
    throw notFound();
  }
  auto cont = app->second.find(rest[3].str());
  if (cont == app->second.end()) {
    throw notFound();
  }
  if (rest.size() == 4) {
    return {ResourceKind::Container, app->first, cont->first, std::nullopt};
  }
  if (rest.size() != 6 || rest[4].str() != kContentInstances) {
    throw notFound();
  }

  const auto& selector = rest[5].str();
  const Container& c = cont->second;
  std::uint64_t index = 0;
  if (selector == kLatest) {
    index = c.latest().index;
  }
  else if (selector == kOldest) {
    index = c.oldest().index;
  }
  else {
    auto [ptr, ec] = std::from_chars(selector.data(), selector.data() + selector.size(), index);
    if (ec != std::errc{} || ptr != selector.data() + selector.size()) {
      throw notFound();
    }
    c.at(index);
  }
  return {ResourceKind::ContentInstance, app->first, cont->first, index};
}

const std::string&
ResourceTree::read(const Name& name) const
{
  auto ref = resolve(name);
  if (ref.kind != ResourceKind::ContentInstance) {
    throw Error(Errc::NotFound, "'" + name.toUri() + "' is not a content instance");
  }
  return container(ref.application, ref.container).at(*ref.instance).payload;
}

Name
ResourceTree::applicationName(std::string_view app) const
{
  return m_base.append(kApplications).append(app);
}

Name
ResourceTree::containerName(std::string_view app, std::string_view container) const
{
  return applicationName(app).append(kContainers).append(container);
}

} // namespace oscl::scl
