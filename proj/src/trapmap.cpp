#include "skipweb/trapmap.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skipweb/errors.hpp"

namespace skipweb {

namespace {

struct BTrap {
  Segment top, bottom;
  bool top_box = true, bottom_box = true;
  std::int64_t lx = 0, rx = 0;
  bool alive = true;
};

TrapRange to_range(const BTrap& t) {
  return TrapRange{false, t.top, t.bottom, t.top_box, t.bottom_box, t.lx, t.rx};
}

// Vertical order of two boundary segments at integer abscissa x.
int cmp_at(const Segment& a, const Segment& b, std::int64_t x) {
  return compare_segments_at(a, b, x, 1);
}

// Does s run strictly between bottom and top over the open interval (xl, xr)?
// Valid because boundaries never cross inside the interval.
bool strictly_between(const Segment& s, const Segment& top, const Segment& bottom, std::int64_t xl,
                      std::int64_t xr) {
  i128 p = i128(xl) + i128(xr), q = 2;
  return compare_segments_at(top, s, p, q) > 0 && compare_segments_at(s, bottom, p, q) > 0;
}

Segment box_top(const BBox& b) { return Segment{b.xmin, b.ymax, b.xmax, b.ymax}; }
Segment box_bottom(const BBox& b) { return Segment{b.xmin, b.ymin, b.xmax, b.ymin}; }

}  // namespace

bool segment_cuts_trapezoid(const Segment& s, const TrapRange& t) {
  std::int64_t xl = std::max(t.lx, s.x1);
  std::int64_t xr = std::min(t.rx, s.x2);
  if (xl >= xr) return false;
  return strictly_between(s, t.top, t.bottom, xl, xr);
}

TrapConflictCount trap_conflict_count(const TrapRange& t, const GroundSet& s) {
  TrapConflictCount out;
  for (const Item& it : s.items()) {
    const Segment& seg = std::get<Segment>(it);
    if (!segment_cuts_trapezoid(seg, t)) continue;
    int inside = 0;
    if (t.contains_interior(PointXY{seg.x1, seg.y1})) ++inside;
    if (t.contains_interior(PointXY{seg.x2, seg.y2})) ++inside;
    if (inside == 0)
      ++out.a;
    else if (inside == 1)
      ++out.b;
    else
      ++out.c;
  }
  return out;
}

TrapMapStructure::TrapMapStructure(const Universe& u, const GroundSet& s)
    : Structure(u, StructureKind::TrapMap) {
  const BBox& box = u.bbox;
  for (const Item& it : s.items()) segments_.push_back(std::get<Segment>(it));

  std::vector<BTrap> traps;
  traps.push_back(BTrap{box_top(box), box_bottom(box), true, true, box.xmin, box.xmax, true});
  std::multimap<std::int64_t, std::size_t> by_lx;
  by_lx.emplace(box.xmin, 0);
  std::map<std::int64_t, std::int64_t> wall_y;  // endpoint x -> endpoint y

  for (const Segment& seg : segments_) {
    // Trapezoids currently crossed by seg, left to right.
    std::vector<std::size_t> run;
    for (std::size_t i = 0; i < traps.size(); ++i) {
      if (traps[i].alive && traps[i].lx < seg.x1 && seg.x1 < traps[i].rx &&
          to_range(traps[i]).contains_interior(PointXY{seg.x1, seg.y1})) {
        run.push_back(i);
        break;
      }
    }
    while (seg.x2 > traps[run.back()].rx) {
      std::int64_t x = traps[run.back()].rx;
      auto [lo, hi] = by_lx.equal_range(x);
      std::size_t next = static_cast<std::size_t>(-1);
      for (auto it = lo; it != hi; ++it) {
        const BTrap& cand = traps[it->second];
        if (!cand.alive) continue;
        if (strictly_between(seg, cand.top, cand.bottom, x, std::min(cand.rx, seg.x2))) {
          next = it->second;
          break;
        }
      }
      if (next == static_cast<std::size_t>(-1))
        fail(Errc::DegenerateInput, "lost the trapezoid run while inserting a segment");
      run.push_back(next);
    }

    std::vector<BTrap> fresh;
    const BTrap first = traps[run.front()];
    const BTrap last = traps[run.back()];
    if (first.lx < seg.x1)
      fresh.push_back(BTrap{first.top, first.bottom, first.top_box, first.bottom_box, first.lx,
                            seg.x1, true});
    if (last.rx > seg.x2)
      fresh.push_back(
          BTrap{last.top, last.bottom, last.top_box, last.bottom_box, seg.x2, last.rx, true});

    // Regions above and below seg, merged across walls the segment now clips.
    BTrap above{first.top, seg, first.top_box, false, seg.x1, 0, true};
    BTrap below{seg, first.bottom, false, first.bottom_box, seg.x1, 0, true};
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
      std::int64_t x = traps[run[i]].rx;
      auto wy = wall_y.find(x);
      if (wy == wall_y.end()) fail(Errc::DegenerateInput, "run wall without a generating endpoint");
      // endpoint above seg: the wall's upper part survives, splitting the
      // above-region; otherwise the wall is clipped and the regions merge.
      int side = side_of_segment_at(seg, x, 1, wy->second, 1);  // sign(seg(x) - e.y)
      if (side == 0) fail(Errc::DegenerateInput, "segment passes through an existing endpoint");
      const BTrap& nxt = traps[run[i + 1]];
      if (side < 0) {  // endpoint above seg
        above.rx = x;
        fresh.push_back(above);
        above = BTrap{nxt.top, seg, nxt.top_box, false, x, 0, true};
      }
      if (side > 0) {  // endpoint below seg
        below.rx = x;
        fresh.push_back(below);
        below = BTrap{seg, nxt.bottom, false, nxt.bottom_box, x, 0, true};
      }
    }
    above.rx = seg.x2;
    below.rx = seg.x2;
    fresh.push_back(above);
    fresh.push_back(below);

    for (std::size_t i : run) traps[i].alive = false;
    for (BTrap& t : fresh) {
      traps.push_back(t);
      by_lx.emplace(t.lx, traps.size() - 1);
    }
    wall_y[seg.x1] = seg.y1;
    wall_y[seg.x2] = seg.y2;
  }

  // Canonical order: by x-extent, then by vertical position.
  std::vector<const BTrap*> live;
  for (const BTrap& t : traps)
    if (t.alive) live.push_back(&t);
  std::sort(live.begin(), live.end(), [](const BTrap* a, const BTrap* b) {
    if (a->lx != b->lx) return a->lx < b->lx;
    if (a->rx != b->rx) return a->rx < b->rx;
    i128 p = i128(a->lx) + i128(a->rx), q = 2;
    int c = compare_segments_at(a->bottom, b->bottom, p, q);
    if (c != 0) return c < 0;
    return compare_segments_at(a->top, b->top, p, q) < 0;
  });

  std::map<std::int64_t, std::vector<ElementId>> ends_at, starts_at;
  for (const BTrap* t : live) {
    ElementId id = graph_.add_node(to_range(*t));
    node_ids_.push_back(id);
    ends_at[t->rx].push_back(id);
    starts_at[t->lx].push_back(id);
  }
  first_node_ = node_ids_.empty() ? kNoElement : node_ids_.front();

  // Adjacency: a link per pair of cells sharing a positive-length piece of
  // wall.  The wall range is degenerate (never conflicts with anything).
  for (auto& [x, lefts] : ends_at) {
    auto it = starts_at.find(x);
    if (it == starts_at.end()) continue;
    for (ElementId a : lefts) {
      const TrapRange& ta = trange(a);
      for (ElementId b : it->second) {
        const TrapRange& tb = trange(b);
        int top_ab = cmp_at(ta.top, tb.top, x);
        const Segment& wall_top = top_ab <= 0 ? ta.top : tb.top;
        bool wall_top_box = top_ab <= 0 ? ta.top_box : tb.top_box;
        int bot_ab = cmp_at(ta.bottom, tb.bottom, x);
        const Segment& wall_bot = bot_ab >= 0 ? ta.bottom : tb.bottom;
        bool wall_bot_box = bot_ab >= 0 ? ta.bottom_box : tb.bottom_box;
        if (cmp_at(wall_top, wall_bot, x) <= 0) continue;  // no shared opening
        graph_.add_link(TrapRange{true, wall_top, wall_bot, wall_top_box, wall_bot_box, x, x}, a,
                        b);
      }
    }
  }

  // Max-rx segment tree over the lx-sorted nodes, for conflict queries.
  rx_tree_.assign(2 * std::max<std::size_t>(1, node_ids_.size()), box.xmin);
  std::size_t n = node_ids_.size();
  for (std::size_t i = 0; i < n; ++i) rx_tree_[n + i] = trange(node_ids_[i]).rx;
  for (std::size_t i = n; i-- > 1;) rx_tree_[i] = std::max(rx_tree_[2 * i], rx_tree_[2 * i + 1]);
}

std::vector<ElementId> TrapMapStructure::overlap_candidates(std::int64_t qlx,
                                                            std::int64_t qrx) const {
  // Nodes with lx < qrx and rx > qlx.
  std::vector<ElementId> out;
  std::size_t n = node_ids_.size();
  if (n == 0) return out;
  std::size_t hi = n;
  while (hi > 0 && trange(node_ids_[hi - 1]).lx >= qrx) --hi;

  // Descend the max-rx tree over [0, hi).
  std::vector<std::size_t> stack = {1};
  if (n == 1) {
    if (hi > 0 && rx_tree_[1] > qlx) out.push_back(node_ids_[0]);
    return out;
  }
  while (!stack.empty()) {
    std::size_t node = stack.back();
    stack.pop_back();
    if (rx_tree_[node] <= qlx) continue;
    if (node >= n) {
      std::size_t idx = node - n;
      if (idx < hi) out.push_back(node_ids_[idx]);
      continue;
    }
    stack.push_back(2 * node);
    stack.push_back(2 * node + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> TrapMapStructure::conflicts_with(const Range& r) const {
  const TrapRange& q = std::get<TrapRange>(r);
  if (q.is_wall) return {};
  std::vector<ElementId> out;
  for (ElementId c : overlap_candidates(q.lx, q.rx))
    if (trange(c).interiors_overlap(q)) out.push_back(c);
  return out;
}

bool TrapMapStructure::query_on_boundary(const PointXY& q) const {
  const BBox& box = graph_.universe().bbox;
  if (!box.contains(q.x, q.y)) return true;
  for (const Segment& s : segments_) {
    if (point_on_segment(s, q.x, q.y)) return true;
    if (q.x == s.x1 || q.x == s.x2) return true;  // on a vertical wall line
  }
  return false;
}

ElementId TrapMapStructure::walk_toward(ElementId at, const PointXY& q) const {
  const TrapRange& t = trange(at);
  if (t.contains_interior(q)) return at;

  auto neighbors_through = [&](std::int64_t x) {
    std::vector<ElementId> out;
    for (ElementId l : graph_.links_of(at)) {
      if (trange(l).lx != x) continue;
      out.push_back(graph_.other_end(l, at));
    }
    return out;
  };

  std::int64_t wall = q.x >= t.rx ? t.rx : (q.x <= t.lx ? t.lx : -1);
  if (wall < 0) {
    // x-overlap but wrong side of a bounding segment: slide toward the nearer
    // end of that segment.
    bool above = side_of_segment_at(t.top, q.x, 1, q.y, 1) <= 0;
    const Segment& s = above ? t.top : t.bottom;
    wall = (s.x2 - q.x <= q.x - s.x1) ? t.rx : t.lx;
  }
  std::vector<ElementId> cands = neighbors_through(wall);
  if (cands.empty()) {
    // No opening on the preferred side; try the other one.
    cands = neighbors_through(wall == t.rx ? t.lx : t.rx);
    if (cands.empty()) return at;
  }
  // Prefer the neighbor whose opening covers q's height at the wall.
  ElementId best = cands.front();
  for (ElementId c : cands) {
    const TrapRange& tc = trange(c);
    if (side_of_segment_at(tc.top, wall, 1, q.y, 1) > 0 &&
        side_of_segment_at(tc.bottom, wall, 1, q.y, 1) < 0) {
      best = c;
      break;
    }
  }
  return best;
}

ElementId TrapMapStructure::locate_trapezoid(const PointXY& q, ElementId start) const {
  if (query_on_boundary(q)) fail(Errc::OnBoundary, "query point lies on a wall or segment");
  ElementId at = start;
  std::set<ElementId> visited;
  while (true) {
    if (trange(at).contains_interior(q)) return at;
    if (!visited.insert(at).second) break;  // revisit: fall back to exhaustive search
    ElementId next = walk_toward(at, q);
    if (next == at) break;
    at = next;
  }
  for (ElementId id : node_ids_)
    if (trange(id).contains_interior(q)) return id;
  fail(Errc::OnBoundary, "no trapezoid strictly contains the query point");
}

ElementId TrapMapStructure::locate_step(ElementId at, const Query& q) const {
  const PointXY& p = std::get<PointXY>(q);
  if (graph_.at(at).is_link) {
    // Walls hand over to whichever endpoint makes progress.
    ElementId a = graph_.at(at).end_a, b = graph_.at(at).end_b;
    return trange(b).contains_interior(p) ? b : a;
  }
  if (trange(at).contains_interior(p)) return at;
  return walk_toward(at, p);
}

LocateResult TrapMapStructure::locate(const Query& q, ElementId start) const {
  LocateResult res;
  res.element = locate_trapezoid(std::get<PointXY>(q), start);
  res.exact = false;
  return res;
}

LocateResult TrapMapStructure::finish_locate(ElementId at, const Query& q) const {
  LocateResult res;
  res.element = at;
  res.exact = false;
  (void)q;
  return res;
}

ElementId TrapMapStructure::pick_entry(const std::vector<ElementId>& candidates,
                                       const Query& q) const {
  const PointXY& p = std::get<PointXY>(q);
  for (ElementId c : candidates) {
    if (!graph_.alive(c) || graph_.at(c).is_link) continue;
    if (trange(c).contains_interior(p)) return c;
  }
  return candidates.empty() ? kNoElement : candidates.front();
}

bool TrapMapStructure::contains_item(const Item& x) const {
  const Segment& s = std::get<Segment>(x);
  return std::binary_search(segments_.begin(), segments_.end(), s);
}

UpdateDelta TrapMapStructure::insert_item(const Item&) {
  fail(Errc::InvalidItem, "trapezoidal maps do not support local updates");
}

UpdateDelta TrapMapStructure::erase_item(const Item&) {
  fail(Errc::InvalidItem, "trapezoidal maps do not support local updates");
}

}  // namespace skipweb
