#pragma once

#include <optional>
#include <vector>

#include "skipweb/structure.hpp"

namespace skipweb {

// Compressed quadtree/octree over points in the bounding hypercube [0,1)^d at
// coord_bits of dyadic resolution.  Nodes are the root cell, every cell with
// two or more occupied child quadrants, and one quadrant-leaf per point;
// single-child chains are contracted into links.  A link carries the child's
// cell as its range.
class QuadtreeStructure : public Structure {
 public:
  explicit QuadtreeStructure(const Universe& u, const GroundSet& s);

  ElementId root_element() const override { return root_; }
  ElementId locate_step(ElementId at, const Query& q) const override;
  LocateResult finish_locate(ElementId at, const Query& q) const override;
  ElementId pick_entry(const std::vector<ElementId>& candidates, const Query& q) const override;

  bool contains_item(const Item& x) const override;
  UpdateDelta insert_item(const Item& x) override;
  UpdateDelta erase_item(const Item& x) override;

  std::vector<ElementId> conflicts_with(const Range& r) const override;

  std::size_t point_count() const { return static_cast<std::size_t>(info_[root_].point_count); }

 private:
  struct NodeInfo {
    std::vector<ElementId> child_links;
    ElementId parent_link = kNoElement;
    int point_count = 0;           // points in this subtree
    std::optional<PointD> point;   // set on leaves only
  };

  const CellRange& cell(ElementId node) const { return std::get<CellRange>(graph_.at(node).range); }
  void build_rec(const std::vector<const PointD*>& pts, std::uint32_t sep_depth, ElementId node);
  ElementId add_cell_node(const PointD& corner, std::uint32_t depth);
  ElementId link_child(ElementId parent, ElementId child);
  ElementId add_leaf(ElementId parent, const PointD& p, std::uint32_t depth, UpdateDelta* d);
  void unlink(ElementId node);
  void bump_counts(ElementId node, int delta);
  ElementId deepest_node_containing(const PointD& p) const;
  std::uint32_t separating_depth(const PointD& a, const PointD& b) const;

  ElementId root_ = kNoElement;
  std::vector<NodeInfo> info_;  // indexed by element id (links unused)
};

}  // namespace skipweb
