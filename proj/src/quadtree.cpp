#include "skipweb/quadtree.hpp"

#include <algorithm>
#include <optional>

#include "skipweb/errors.hpp"

namespace skipweb {

namespace {

bool same_quadrant(const PointD& a, const PointD& b, std::uint32_t depth_plus_one) {
  for (std::size_t ax = 0; ax < a.coords.size(); ++ax)
    if (!a.coords[ax].prefix_equals(b.coords[ax], depth_plus_one)) return false;
  return true;
}

}  // namespace

QuadtreeStructure::QuadtreeStructure(const Universe& u, const GroundSet& s)
    : Structure(u, StructureKind::Quadtree) {
  PointD origin;
  for (int a = 0; a < u.dim; ++a) origin.coords.push_back(BitKey::zeros(u.coord_bits));
  root_ = add_cell_node(origin, 0);

  std::vector<const PointD*> pts;
  pts.reserve(s.size());
  for (const Item& it : s.items()) pts.push_back(&std::get<PointD>(it));  // z-order

  info_[root_].point_count = static_cast<int>(pts.size());
  if (pts.empty()) return;
  if (pts.size() == 1) {
    info_[root_].point = *pts[0];
    return;
  }

  std::uint32_t d_all = u.coord_bits;
  for (std::size_t i = 1; i < pts.size(); ++i)
    d_all = std::min(d_all, separating_depth(*pts[i - 1], *pts[i]));
  if (d_all == 0) {
    build_rec(pts, 0, root_);
  } else {
    ElementId sep = add_cell_node(*pts[0], d_all);
    info_[sep].point_count = static_cast<int>(pts.size());
    link_child(root_, sep);
    build_rec(pts, d_all, sep);
  }
}

std::uint32_t QuadtreeStructure::separating_depth(const PointD& a, const PointD& b) const {
  std::uint32_t d = graph_.universe().coord_bits;
  for (std::size_t ax = 0; ax < a.coords.size(); ++ax)
    d = std::min(d, a.coords[ax].first_diff(b.coords[ax]));
  return d;
}

ElementId QuadtreeStructure::add_cell_node(const PointD& corner, std::uint32_t depth) {
  ElementId id = graph_.add_node(CellRange{corner, depth});
  info_.resize(graph_.capacity());
  return id;
}

ElementId QuadtreeStructure::link_child(ElementId parent, ElementId child) {
  ElementId l = graph_.add_link(graph_.at(child).range, parent, child);
  info_.resize(graph_.capacity());
  info_[parent].child_links.push_back(l);
  info_[child].parent_link = l;
  return l;
}

ElementId QuadtreeStructure::add_leaf(ElementId parent, const PointD& p, std::uint32_t depth,
                                      UpdateDelta* d) {
  ElementId leaf = add_cell_node(p, depth);
  info_[leaf].point = p;
  info_[leaf].point_count = 1;
  ElementId l = link_child(parent, leaf);
  if (d) {
    d->created.push_back(leaf);
    d->created.push_back(l);
  }
  return leaf;
}

// pts: >= 2 points whose separating cell has depth `sep_depth` = the depth of
// `node`; split into child groups by quadrant at sep_depth.
void QuadtreeStructure::build_rec(const std::vector<const PointD*>& pts, std::uint32_t sep_depth,
                                  ElementId node) {
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i + 1;
    while (j < pts.size() && same_quadrant(*pts[i], *pts[j], sep_depth + 1)) ++j;
    if (j - i == 1) {
      add_leaf(node, *pts[i], sep_depth + 1, nullptr);
    } else {
      std::uint32_t d = graph_.universe().coord_bits;
      for (std::size_t t = i + 1; t < j; ++t)
        d = std::min(d, separating_depth(*pts[t - 1], *pts[t]));
      ElementId child = add_cell_node(*pts[i], d);
      info_[child].point_count = static_cast<int>(j - i);
      link_child(node, child);
      std::vector<const PointD*> group(pts.begin() + i, pts.begin() + j);
      build_rec(group, d, child);
    }
    i = j;
  }
}

ElementId QuadtreeStructure::deepest_node_containing(const PointD& p) const {
  ElementId at = root_;
  while (true) {
    ElementId next = kNoElement;
    for (ElementId l : info_[at].child_links) {
      if (!graph_.alive(l)) continue;
      ElementId c = graph_.other_end(l, at);
      if (cell(c).contains_point(p)) {
        next = c;
        break;
      }
    }
    if (next == kNoElement) return at;
    at = next;
  }
}

ElementId QuadtreeStructure::locate_step(ElementId at, const Query& q) const {
  const PointD& p = std::get<PointD>(q);
  const Element& e = graph_.at(at);
  const CellRange& r = std::get<CellRange>(e.range);
  if (e.is_link) {
    // A link carries the child's cell: descend when it holds q, back out otherwise.
    return r.contains_point(p) ? e.end_b : e.end_a;
  }
  if (!r.contains_point(p)) {
    ElementId up = info_[at].parent_link;
    if (up != kNoElement && graph_.alive(up)) return up;
    fail(Errc::OutsideRoot, "query point outside the bounding hypercube");
  }
  for (ElementId l : info_[at].child_links) {
    if (!graph_.alive(l)) continue;
    if (std::get<CellRange>(graph_.at(l).range).contains_point(p)) return l;
  }
  return at;
}

LocateResult QuadtreeStructure::finish_locate(ElementId at, const Query& q) const {
  LocateResult res;
  res.element = at;
  const NodeInfo& ni = info_[at];
  res.exact =
      !graph_.at(at).is_link && ni.point.has_value() && *ni.point == std::get<PointD>(q);
  return res;
}

ElementId QuadtreeStructure::pick_entry(const std::vector<ElementId>& candidates,
                                        const Query& q) const {
  const PointD& p = std::get<PointD>(q);
  ElementId best = kNoElement;
  std::uint32_t best_depth = 0;
  bool best_is_node = false;
  for (ElementId c : candidates) {
    if (!graph_.alive(c)) continue;
    const Element& e = graph_.at(c);
    const CellRange& r = std::get<CellRange>(e.range);
    if (!r.contains_point(p)) continue;
    bool better = best == kNoElement || r.depth > best_depth ||
                  (r.depth == best_depth && !e.is_link && !best_is_node);
    if (better) {
      best = c;
      best_depth = r.depth;
      best_is_node = !e.is_link;
    }
  }
  if (best != kNoElement) return best;
  return candidates.empty() ? kNoElement : candidates.front();
}

bool QuadtreeStructure::contains_item(const Item& x) const {
  const PointD& p = std::get<PointD>(x);
  const NodeInfo& ni = info_[deepest_node_containing(p)];
  return ni.point.has_value() && *ni.point == p;
}

void QuadtreeStructure::bump_counts(ElementId node, int delta) {
  for (ElementId n = node;;) {
    info_[n].point_count += delta;
    ElementId up = info_[n].parent_link;
    if (up == kNoElement || !graph_.alive(up)) break;
    n = graph_.at(up).end_a;
  }
}

UpdateDelta QuadtreeStructure::insert_item(const Item& x) {
  validate_item(graph_.universe(), x);
  const PointD& p = std::get<PointD>(x);
  if (contains_item(x)) fail(Errc::DuplicatePoint, item_to_string(x));

  UpdateDelta d;
  if (info_[root_].point_count == 0) {  // bare root becomes the leaf for p
    info_[root_].point = p;
    info_[root_].point_count = 1;
    return d;
  }

  ElementId at = deepest_node_containing(p);
  if (info_[at].point.has_value()) {
    // Occupied leaf: both points move under their smallest separating cell.
    const PointD r = *info_[at].point;
    std::uint32_t dsep = separating_depth(r, p);
    ElementId parent;
    if (at == root_) {
      info_[root_].point.reset();
      info_[root_].point_count = 2;
      parent = root_;
      if (dsep > 0) {
        ElementId sep = add_cell_node(r, dsep);
        info_[sep].point_count = 2;
        ElementId l = link_child(root_, sep);
        d.created.insert(d.created.end(), {sep, l});
        parent = sep;
      }
    } else {
      ElementId plink = info_[at].parent_link;
      ElementId pnode = graph_.at(plink).end_a;
      d.replaced = {at, plink};
      unlink(at);
      parent = add_cell_node(r, dsep);
      info_[parent].point_count = 2;
      ElementId l = link_child(pnode, parent);
      d.created.insert(d.created.end(), {parent, l});
      bump_counts(pnode, +1);
    }
    std::uint32_t leaf_depth = cell(parent).depth + 1;
    add_leaf(parent, r, leaf_depth, &d);
    add_leaf(parent, p, leaf_depth, &d);
    return d;
  }

  // Internal cell: p lands in a quadrant, either empty or holding a child
  // whose cell misses p (a compressed gap).
  ElementId gap_link = kNoElement;
  for (ElementId l : info_[at].child_links) {
    if (!graph_.alive(l)) continue;
    ElementId c = graph_.other_end(l, at);
    if (same_quadrant(cell(c).corner, p, cell(at).depth + 1)) {
      gap_link = l;
      break;
    }
  }
  if (gap_link == kNoElement) {
    add_leaf(at, p, cell(at).depth + 1, &d);
  } else {
    ElementId c = graph_.other_end(gap_link, at);
    std::uint32_t dsep = separating_depth(cell(c).corner, p);
    d.replaced = {gap_link};
    graph_.retire(gap_link);
    auto& acl = info_[at].child_links;
    acl.erase(std::remove(acl.begin(), acl.end(), gap_link), acl.end());

    ElementId mid = add_cell_node(cell(c).corner, dsep);
    info_[mid].point_count = info_[c].point_count + 1;
    ElementId lmid = link_child(at, mid);
    ElementId lc = link_child(mid, c);
    d.created.insert(d.created.end(), {mid, lmid, lc});
    add_leaf(mid, p, dsep + 1, &d);
  }
  bump_counts(at, +1);
  return d;
}

void QuadtreeStructure::unlink(ElementId node) {
  ElementId plink = info_[node].parent_link;
  graph_.retire(node);
  if (plink != kNoElement && graph_.alive(plink)) {
    ElementId parent = graph_.at(plink).end_a;
    graph_.retire(plink);
    auto& pcl = info_[parent].child_links;
    pcl.erase(std::remove(pcl.begin(), pcl.end(), plink), pcl.end());
  }
}

UpdateDelta QuadtreeStructure::erase_item(const Item& x) {
  const PointD& p = std::get<PointD>(x);
  ElementId leaf = deepest_node_containing(p);
  if (!info_[leaf].point.has_value() || !(*info_[leaf].point == p))
    fail(Errc::ItemNotFound, item_to_string(x));

  UpdateDelta d;
  if (leaf == root_) {  // the only point
    info_[root_].point.reset();
    info_[root_].point_count = 0;
    return d;
  }

  ElementId plink = info_[leaf].parent_link;
  ElementId parent = graph_.at(plink).end_a;
  d.replaced = {leaf, plink};
  unlink(leaf);
  bump_counts(parent, -1);

  if (info_[root_].point_count == 1) {
    // One point remains: the canonical tree is a bare root leaf.
    std::optional<PointD> survivor;
    for (ElementId i = 0; i < graph_.capacity(); ++i) {
      if (!graph_.alive(i) || i == root_) continue;
      if (!graph_.at(i).is_link && info_[i].point.has_value()) survivor = info_[i].point;
      d.replaced.push_back(i);
      graph_.retire(i);
    }
    info_[root_].child_links.clear();
    info_[root_].point = survivor;
    std::sort(d.replaced.begin(), d.replaced.end());
    return d;
  }

  if (parent != root_ && info_[parent].child_links.size() == 1) {
    ElementId clink = info_[parent].child_links[0];
    ElementId c = graph_.other_end(clink, parent);
    ElementId gp_link = info_[parent].parent_link;
    ElementId gp = graph_.at(gp_link).end_a;
    if (info_[c].point.has_value()) {
      // Remaining child is a leaf: it lifts to the grandparent's quadrant.
      PointD cp = *info_[c].point;
      d.replaced.insert(d.replaced.end(), {parent, gp_link, clink, c});
      graph_.retire(clink);
      graph_.retire(c);
      unlink(parent);
      add_leaf(gp, cp, cell(gp).depth + 1, &d);
    } else {
      // Remaining child is internal: contract the chain.
      d.replaced.insert(d.replaced.end(), {parent, gp_link, clink});
      graph_.retire(clink);
      unlink(parent);
      ElementId l = link_child(gp, c);
      d.created.push_back(l);
    }
  }
  std::sort(d.replaced.begin(), d.replaced.end());
  return d;
}

std::vector<ElementId> QuadtreeStructure::conflicts_with(const Range& r) const {
  const CellRange& q = std::get<CellRange>(r);
  std::vector<ElementId> out;
  // Walk the root path toward q's corner; ancestors of q lie on it, and once a
  // cell falls inside q its whole subtree conflicts.
  std::vector<ElementId> inside_stack;
  ElementId at = root_;
  while (at != kNoElement) {
    if (cell(at).nested_with(q)) out.push_back(at);
    ElementId next = kNoElement;
    for (ElementId l : info_[at].child_links) {
      if (!graph_.alive(l)) continue;
      ElementId c = graph_.other_end(l, at);
      if (!cell(c).nested_with(q)) continue;
      out.push_back(l);
      if (cell(c).depth <= q.depth) {
        next = c;  // still contains q's cell
      } else {
        inside_stack.push_back(c);  // fully inside q
      }
    }
    at = next;
  }
  while (!inside_stack.empty()) {
    ElementId n = inside_stack.back();
    inside_stack.pop_back();
    out.push_back(n);
    for (ElementId l : info_[n].child_links) {
      if (!graph_.alive(l)) continue;
      out.push_back(l);
      inside_stack.push_back(graph_.other_end(l, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skipweb
