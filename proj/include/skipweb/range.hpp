#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "skipweb/universe.hpp"

namespace skipweb {

// ---------------------------------------------------------------------------
// Range payloads.  A range is the set of universe values owned by a node or
// link; incidence and conflict lists are all defined through intersection of
// these sets, so the predicates here are the semantic core of the library.
// ---------------------------------------------------------------------------

// A key extended with -inf/+inf, so sentinel elements make point location
// total over the whole order.
struct Bound {
  std::int8_t kind = 0;  // -1: -inf, 0: finite, +1: +inf
  Key k = 0;

  static Bound neg_inf() { return Bound{-1, 0}; }
  static Bound pos_inf() { return Bound{+1, 0}; }
  static Bound at(Key key) { return Bound{0, key}; }
  bool finite() const { return kind == 0; }
};

inline int bound_cmp(const Bound& a, const Bound& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind != 0) return 0;
  return a.k < b.k ? -1 : (a.k > b.k ? 1 : 0);
}
inline int bound_cmp_key(const Bound& a, Key q) {
  if (a.kind != 0) return a.kind;
  return a.k < q ? -1 : (a.k > q ? 1 : 0);
}

// Closed interval over the total order.  A node's range is the degenerate
// interval [k, k]; sentinel nodes sit at [-inf,-inf] and [+inf,+inf].
struct KeyRange {
  Bound lo, hi;

  static KeyRange singleton(Key k) { return KeyRange{Bound::at(k), Bound::at(k)}; }
  static KeyRange interval(Bound lo, Bound hi) { return KeyRange{lo, hi}; }

  bool is_singleton() const { return bound_cmp(lo, hi) == 0; }
  bool contains(Key q) const { return bound_cmp_key(lo, q) <= 0 && bound_cmp_key(hi, q) >= 0; }
  // Closed-interval intersection; sharing an endpoint counts.
  bool intersects(const KeyRange& o) const {
    return bound_cmp(lo, o.hi) <= 0 && bound_cmp(o.lo, hi) <= 0;
  }
  // Open-interior overlap: used by the set-halving accounting, where two links
  // that merely share an endpoint do not conflict.
  bool interiors_overlap(const KeyRange& o) const {
    if (is_singleton() || o.is_singleton()) return false;
    return bound_cmp(lo, o.hi) < 0 && bound_cmp(o.lo, hi) < 0;
  }
};

// A dyadic cell of the bounding hypercube: the first `depth` bits of each
// coordinate are fixed to the corner's.  Cells are half-open on high sides, so
// two cells intersect exactly when one is nested in the other.
struct CellRange {
  PointD corner;  // any point inside the cell (bits beyond depth ignored)
  std::uint32_t depth = 0;

  bool contains_point(const PointD& p) const {
    for (std::size_t a = 0; a < corner.coords.size(); ++a)
      if (!corner.coords[a].prefix_equals(p.coords[a], depth)) return false;
    return true;
  }
  bool nested_with(const CellRange& o) const {
    std::uint32_t d = std::min(depth, o.depth);
    for (std::size_t a = 0; a < corner.coords.size(); ++a)
      if (!corner.coords[a].prefix_equals(o.corner.coords[a], d)) return false;
    return true;
  }
};

// Strings reachable by walking an edge of a trie: base plus any prefix of
// label (a node is the degenerate case label = "").
struct StringRange {
  std::string base;
  std::string label;

  std::string full() const { return base + label; }
  bool is_node() const { return label.empty(); }
  // {base1 + p1} and {base2 + p2} meet iff the shared prefix of both full
  // strings reaches past both bases.
  bool intersects(const StringRange& o) const {
    const std::string f1 = full(), f2 = o.full();
    std::size_t n = std::min(f1.size(), f2.size());
    std::size_t l = 0;
    while (l < n && f1[l] == f2[l]) ++l;
    return l >= base.size() && l >= o.base.size();
  }
  bool contains(const std::string& q) const {
    if (q.size() < base.size() || q.size() > base.size() + label.size()) return false;
    return q.compare(0, base.size(), base) == 0 &&
           label.compare(0, q.size() - base.size(), q, base.size(), q.size() - base.size()) == 0;
  }
};

// A trapezoid cell (or the vertical wall carried by an adjacency link; walls
// are degenerate and never conflict with anything).  Trapezoid conflicts mean
// overlapping interiors: two cells of the same map that share a wall do not
// conflict, and a trapezoid conflicts with itself.
struct TrapRange {
  bool is_wall = false;
  Segment top, bottom;  // materialized even for box boundaries
  bool top_box = true, bottom_box = true;
  std::int64_t lx = 0, rx = 0;

  bool interiors_overlap(const TrapRange& o) const;
  bool contains_interior(const PointXY& q) const;
  bool on_boundary(const PointXY& q) const;
};

using Range = std::variant<KeyRange, CellRange, StringRange, TrapRange>;

// Conflict predicate (closed ranges; trapezoids by interior overlap, walls never).
bool ranges_intersect(const Range& a, const Range& b);

// Membership of a query point; boundary ties are the caller's business.
bool range_contains(const Range& r, const Query& q);

// Canonical byte encoding, used for structure fingerprints and id-free
// structural comparison.
std::string range_canonical(const Range& r);

}  // namespace skipweb
