#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skipweb/range.hpp"

namespace skipweb {

using ElementId = std::uint32_t;
inline constexpr ElementId kNoElement = 0xffffffffu;

enum class StructureKind { List1D, Quadtree, Trie, TrapMap };

inline const char* structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::List1D: return "list";
    case StructureKind::Quadtree: return "quadtree";
    case StructureKind::Trie: return "trie";
    case StructureKind::TrapMap: return "trapmap";
  }
  return "?";
}

struct Element {
  Range range;
  bool is_link = false;
  ElementId end_a = kNoElement;  // links: endpoint nodes
  ElementId end_b = kNoElement;
  bool alive = true;
};

// The generic node-and-link view shared by every structure.  Ids are dense and
// never reused; local updates retire elements instead of erasing them, which
// keeps hyperlinks and host maps stable.  Structural equality is id-free: two
// structures are equal when their live elements and incidences match under the
// canonical range encoding.
class LinkStructure {
 public:
  explicit LinkStructure(Universe universe, StructureKind kind)
      : universe_(std::move(universe)), kind_(kind) {}

  const Universe& universe() const { return universe_; }
  StructureKind kind() const { return kind_; }

  ElementId add_node(Range r) {
    elements_.push_back(Element{std::move(r), false, kNoElement, kNoElement, true});
    incident_.emplace_back();
    ++live_nodes_;
    return static_cast<ElementId>(elements_.size() - 1);
  }

  ElementId add_link(Range r, ElementId a, ElementId b) {
    ElementId id = static_cast<ElementId>(elements_.size());
    elements_.push_back(Element{std::move(r), true, a, b, true});
    incident_.emplace_back();
    incident_[a].push_back(id);
    incident_[b].push_back(id);
    ++live_links_;
    return id;
  }

  void retire(ElementId id);

  const Element& at(ElementId id) const { return elements_[id]; }
  bool alive(ElementId id) const { return elements_[id].alive; }
  std::size_t capacity() const { return elements_.size(); }
  std::size_t live_nodes() const { return live_nodes_; }
  std::size_t live_links() const { return live_links_; }
  std::size_t live_count() const { return live_nodes_ + live_links_; }

  // Links incident to a node (live only).
  std::vector<ElementId> links_of(ElementId node) const;
  // The other endpoint of a link.
  ElementId other_end(ElementId link, ElementId node) const {
    const Element& e = elements_[link];
    return e.end_a == node ? e.end_b : e.end_a;
  }

  std::vector<ElementId> live_ids() const;

  // Canonical per-element key: range encoding plus a node/link tag (a quadtree
  // link shares its child's cell, so the tag matters).
  std::string element_key(ElementId id) const;

  // Id-free equality of live content: element keys plus link endpoints.
  bool structurally_equal(const LinkStructure& o) const;
  std::string fingerprint() const;

 private:
  Universe universe_;
  StructureKind kind_;
  std::vector<Element> elements_;
  std::vector<std::vector<ElementId>> incident_;  // node -> link ids (may contain retired)
  std::size_t live_nodes_ = 0;
  std::size_t live_links_ = 0;
};

}  // namespace skipweb
