// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_NAMES_PREFIX_TABLE_HPP
#define OSCL_NAMES_PREFIX_TABLE_HPP

#include "oscl/names/name.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oscl {

template<typename V>
struct PrefixMatch
{
  Name prefix;
  const V& value;
};

/**
 * Name-keyed table with longest-prefix lookup, stored as a trie over
 * components. Lookup cost is bounded by the length of the queried name.
 */
template<typename V>
class PrefixTable
{
public:
  /// Inserts or replaces the entry for exactly `prefix`.
  void
  insert(const Name& prefix, V value)
  {
    Node& node = walkOrCreate(prefix);
    if (!node.value) {
      ++m_size;
    }
    node.value = std::move(value);
  }

  /// Returns the entry for exactly `prefix`, creating it from `init` if absent.
  template<typename Init>
  V&
  findOrInsert(const Name& prefix, Init&& init)
  {
    Node& node = walkOrCreate(prefix);
    if (!node.value) {
      node.value.emplace(std::forward<Init>(init)());
      ++m_size;
    }
    return *node.value;
  }

  const V*
  find(const Name& prefix) const
  {
    const Node* node = &m_root;
    for (const auto& c : prefix) {
      auto it = node->children.find(c.str());
      if (it == node->children.end()) {
        return nullptr;
      }
      node = it->second.get();
    }
    return node->value ? &*node->value : nullptr;
  }

  V*
  find(const Name& prefix)
  {
    return const_cast<V*>(std::as_const(*this).find(prefix));
  }

  std::optional<PrefixMatch<V>>
  longestPrefixMatch(const Name& name) const
  {
    const Node* node = &m_root;
    const V* best = nullptr;
    std::size_t bestLength = 0;
    std::size_t depth = 0;
    for (const auto& c : name) {
      auto it = node->children.find(c.str());
      if (it == node->children.end()) {
        break;
      }
      node = it->second.get();
      ++depth;
      if (node->value) {
        best = &*node->value;
        bestLength = depth;
      }
    }
    if (best == nullptr) {
      return std::nullopt;
    }
    return PrefixMatch<V>{name.getPrefix(bestLength), *best};
  }

  std::size_t
  size() const noexcept
  {
    return m_size;
  }

  bool
  empty() const noexcept
  {
    return m_size == 0;
  }

  /// Visits entries in name order.
  template<typename Fn>
  void
  forEach(Fn&& fn) const
  {
    std::vector<NameComponent> path;
    visit(m_root, path, fn);
  }

private:
  struct Node
  {
    std::optional<V> value;
    std::map<std::string, std::unique_ptr<Node>, std::less<>> children;
  };

  Node&
  walkOrCreate(const Name& prefix)
  {
    Node* node = &m_root;
    for (const auto& c : prefix) {
      auto& child = node->children[c.str()];
      if (!child) {
        child = std::make_unique<Node>();
      }
      node = child.get();
    }
    return *node;
  }

  template<typename Fn>
  static void
  visit(const Node& node, std::vector<NameComponent>& path, Fn& fn)
  {
    if (node.value) {
      fn(Name(path), *node.value);
    }
    for (const auto& [label, child] : node.children) {
      path.emplace_back(label);
      visit(*child, path, fn);
      path.pop_back();
    }
  }

  Node m_root;
  std::size_t m_size = 0;
};

} // namespace oscl

#endif // OSCL_NAMES_PREFIX_TABLE_HPP
