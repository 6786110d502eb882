#pragma once

#include <map>

#include "skipweb/structure.hpp"

namespace skipweb {

// Sorted doubly-linked list over a total order.  Node range = singleton key,
// link range = closed interval between consecutive keys.  Two sentinel nodes
// at -inf/+inf make every location query land on some element.
class ListStructure : public Structure {
 public:
  explicit ListStructure(const Universe& u, const GroundSet& s);

  ElementId root_element() const override { return head_; }
  ElementId locate_step(ElementId at, const Query& q) const override;
  LocateResult finish_locate(ElementId at, const Query& q) const override;
  ElementId pick_entry(const std::vector<ElementId>& candidates, const Query& q) const override;

  bool contains_item(const Item& x) const override;
  UpdateDelta insert_item(const Item& x) override;
  UpdateDelta erase_item(const Item& x) override;

  std::vector<ElementId> conflicts_with(const Range& r) const override;

  // Live elements ordered by range position (sentinel node, link, node, ...).
  std::vector<ElementId> ordered_elements() const;

 private:
  ElementId node_of(Key k) const;
  ElementId head_ = kNoElement;  // -inf sentinel node
  std::map<Key, ElementId> key_nodes_;
  ElementId neg_node_ = kNoElement, pos_node_ = kNoElement;
};

}  // namespace skipweb
