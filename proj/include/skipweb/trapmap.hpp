#pragma once

#include <vector>

#include "skipweb/structure.hpp"

namespace skipweb {

// Counts behind the trapezoid conflict identity: a trapezoid of D(T) conflicts
// with exactly 1 + a + 2b + 3c trapezoids of D(S), where a segments cut all
// the way across, b have one endpoint inside and c both.
struct TrapConflictCount {
  std::size_t a = 0, b = 0, c = 0;
  std::size_t total() const { return 1 + a + 2 * b + 3 * c; }
};

// Trapezoidal map of non-crossing segments inside a bounding box, built by
// incremental insertion.  Nodes are trapezoid cells; links join cells sharing
// a piece of vertical wall (wall ranges are degenerate and never appear in
// conflict lists).  Requires general position: distinct endpoint x-coordinates
// and no endpoint on another segment.
class TrapMapStructure : public Structure {
 public:
  explicit TrapMapStructure(const Universe& u, const GroundSet& s);

  ElementId root_element() const override { return first_node_; }
  ElementId locate_step(ElementId at, const Query& q) const override;
  LocateResult locate(const Query& q, ElementId start) const override;
  LocateResult finish_locate(ElementId at, const Query& q) const override;
  ElementId pick_entry(const std::vector<ElementId>& candidates, const Query& q) const override;

  bool contains_item(const Item& x) const override;
  UpdateDelta insert_item(const Item& x) override;
  UpdateDelta erase_item(const Item& x) override;

  std::vector<ElementId> conflicts_with(const Range& r) const override;

  // Point location with boundary reporting (walks are adjacency-only).
  ElementId locate_trapezoid(const PointXY& q, ElementId start) const;

  std::size_t trapezoid_count() const { return node_ids_.size(); }
  const std::vector<ElementId>& trapezoid_nodes() const { return node_ids_; }
  bool query_on_boundary(const PointXY& q) const;

 private:
  const TrapRange& trange(ElementId id) const { return std::get<TrapRange>(graph_.at(id).range); }
  ElementId walk_toward(ElementId at, const PointXY& q) const;
  std::vector<ElementId> overlap_candidates(std::int64_t qlx, std::int64_t qrx) const;

  ElementId first_node_ = kNoElement;
  std::vector<ElementId> node_ids_;   // trapezoid nodes sorted by (lx, rx, height)
  std::vector<Segment> segments_;     // the ground set, canonical order
  // interval index over node_ids_: max rx per segment-tree cell
  std::vector<std::int64_t> rx_tree_;
};

// Classifies the segments of s against trapezoid t of a map built from a
// subset of s, returning the exact conflict counts.
TrapConflictCount trap_conflict_count(const TrapRange& t, const GroundSet& s);

// True if segment s crosses the interior of trapezoid t.
bool segment_cuts_trapezoid(const Segment& s, const TrapRange& t);

}  // namespace skipweb
