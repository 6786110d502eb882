#pragma once

#include <memory>
#include <vector>

#include "skipweb/link_structure.hpp"

namespace skipweb {

struct LocateResult {
  ElementId element = kNoElement;
  int matched = -1;   // tries: characters of q matched before divergence
  bool exact = false; // query coincides with a stored item
};

struct UpdateDelta {
  std::vector<ElementId> replaced;
  std::vector<ElementId> created;
};

// A range-determined link structure: nodes and links over one ground set,
// supporting local point location (single adjacency steps, so a host network
// can charge for each cross-host move), constant-size local updates, and
// conflict enumeration against arbitrary ranges.
class Structure {
 public:
  explicit Structure(Universe u, StructureKind k) : graph_(std::move(u), k) {}
  virtual ~Structure() = default;

  const LinkStructure& graph() const { return graph_; }
  StructureKind kind() const { return graph_.kind(); }
  const Universe& universe() const { return graph_.universe(); }

  virtual ElementId root_element() const = 0;

  // One adjacency step from `at` toward the element owning q; returns `at`
  // when the walk is finished.
  virtual ElementId locate_step(ElementId at, const Query& q) const = 0;

  // Details of a finished walk (exactness, trie divergence index).
  virtual LocateResult finish_locate(ElementId at, const Query& q) const;

  virtual LocateResult locate(const Query& q, ElementId start) const;
  LocateResult locate(const Query& q) const { return locate(q, root_element()); }

  // Among candidate elements, the best one to continue a search for q from
  // (kNoElement if none is usable).
  virtual ElementId pick_entry(const std::vector<ElementId>& candidates, const Query& q) const;

  virtual bool contains_item(const Item& x) const = 0;
  virtual UpdateDelta insert_item(const Item& x) = 0;
  virtual UpdateDelta erase_item(const Item& x) = 0;

  // All live elements whose range conflicts with r.  Matches the brute-force
  // conflict list; subclasses may use structure-aware enumeration.
  virtual std::vector<ElementId> conflicts_with(const Range& r) const;

  // Brute-force scan; the reference semantics for conflict lists.
  std::vector<ElementId> conflicts_brute(const Range& r) const;

 protected:
  LinkStructure graph_;
};

std::unique_ptr<Structure> build_structure(const Universe& u, const GroundSet& s);

}  // namespace skipweb
