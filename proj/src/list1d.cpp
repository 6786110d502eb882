#include "skipweb/list1d.hpp"

#include <algorithm>

#include "skipweb/errors.hpp"

namespace skipweb {

namespace {

Bound node_bound(const KeyRange& r) { return r.lo; }  // nodes are degenerate intervals

}  // namespace

ListStructure::ListStructure(const Universe& u, const GroundSet& s)
    : Structure(u, StructureKind::List1D) {
  neg_node_ = graph_.add_node(KeyRange{Bound::neg_inf(), Bound::neg_inf()});
  pos_node_ = graph_.add_node(KeyRange{Bound::pos_inf(), Bound::pos_inf()});
  head_ = neg_node_;

  ElementId prev = neg_node_;
  Bound prev_bound = Bound::neg_inf();
  for (const Item& it : s.items()) {
    Key k = std::get<Key>(it);
    ElementId node = graph_.add_node(KeyRange::singleton(k));
    key_nodes_[k] = node;
    graph_.add_link(KeyRange::interval(prev_bound, Bound::at(k)), prev, node);
    prev = node;
    prev_bound = Bound::at(k);
  }
  graph_.add_link(KeyRange::interval(prev_bound, Bound::pos_inf()), prev, pos_node_);
}

ElementId ListStructure::node_of(Key k) const {
  auto it = key_nodes_.find(k);
  return it == key_nodes_.end() ? kNoElement : it->second;
}

ElementId ListStructure::locate_step(ElementId at, const Query& q) const {
  Key k = std::get<Key>(q);
  const Element& e = graph_.at(at);
  const KeyRange& r = std::get<KeyRange>(e.range);
  if (!e.is_link) {
    if (r.contains(k)) return at;  // exact node hit
    // Step onto the link on q's side of this node.
    for (ElementId l : graph_.links_of(at)) {
      const KeyRange& lr = std::get<KeyRange>(graph_.at(l).range);
      if (lr.contains(k)) return l;
      // Directional move even when the link does not contain q yet.
      if (bound_cmp_key(node_bound(r), k) < 0 && bound_cmp(lr.lo, r.lo) == 0) return l;
      if (bound_cmp_key(node_bound(r), k) > 0 && bound_cmp(lr.hi, r.hi) == 0) return l;
    }
    return at;
  }
  // On a link [a, b]: boundary queries resolve to the node.
  if (bound_cmp_key(r.lo, k) == 0) return e.end_a;
  if (bound_cmp_key(r.hi, k) == 0) return e.end_b;
  if (r.contains(k)) return at;
  return bound_cmp_key(r.hi, k) < 0 ? e.end_b : e.end_a;
}

LocateResult ListStructure::finish_locate(ElementId at, const Query& q) const {
  LocateResult res;
  res.element = at;
  const Element& e = graph_.at(at);
  res.exact = !e.is_link && std::get<KeyRange>(e.range).contains(std::get<Key>(q));
  return res;
}

ElementId ListStructure::pick_entry(const std::vector<ElementId>& candidates, const Query& q) const {
  Key k = std::get<Key>(q);
  ElementId best = kNoElement;
  // Prefer the singleton node on an exact hit, otherwise the containing link.
  for (ElementId c : candidates) {
    if (!graph_.alive(c)) continue;
    const Element& e = graph_.at(c);
    if (!std::get<KeyRange>(e.range).contains(k)) continue;
    if (!e.is_link) return c;
    best = c;
  }
  if (best != kNoElement) return best;
  return candidates.empty() ? kNoElement : candidates.front();
}

bool ListStructure::contains_item(const Item& x) const {
  return key_nodes_.count(std::get<Key>(x)) > 0;
}

UpdateDelta ListStructure::insert_item(const Item& x) {
  Key k = std::get<Key>(x);
  if (contains_item(x)) fail(Errc::DuplicateKey, std::to_string(k));
  // The link whose closed range holds k is unique since k is not stored.
  LocateResult loc = locate(Query{k});
  ElementId link = loc.element;
  const Element le = graph_.at(link);
  const KeyRange lr = std::get<KeyRange>(le.range);

  UpdateDelta d;
  d.replaced.push_back(link);
  graph_.retire(link);
  ElementId node = graph_.add_node(KeyRange::singleton(k));
  key_nodes_[k] = node;
  ElementId l1 = graph_.add_link(KeyRange::interval(lr.lo, Bound::at(k)), le.end_a, node);
  ElementId l2 = graph_.add_link(KeyRange::interval(Bound::at(k), lr.hi), node, le.end_b);
  d.created = {node, l1, l2};
  return d;
}

UpdateDelta ListStructure::erase_item(const Item& x) {
  Key k = std::get<Key>(x);
  ElementId node = node_of(k);
  if (node == kNoElement) fail(Errc::ItemNotFound, std::to_string(k));
  std::vector<ElementId> links = graph_.links_of(node);
  // Interior nodes always have exactly a left and a right link.
  ElementId left = links[0], right = links[1];
  if (bound_cmp(std::get<KeyRange>(graph_.at(left).range).lo,
                std::get<KeyRange>(graph_.at(right).range).lo) > 0)
    std::swap(left, right);
  ElementId prev = graph_.other_end(left, node);
  ElementId next = graph_.other_end(right, node);
  Bound lo = std::get<KeyRange>(graph_.at(left).range).lo;
  Bound hi = std::get<KeyRange>(graph_.at(right).range).hi;

  UpdateDelta d;
  d.replaced = {node, left, right};
  graph_.retire(node);
  graph_.retire(left);
  graph_.retire(right);
  key_nodes_.erase(k);
  d.created = {graph_.add_link(KeyRange::interval(lo, hi), prev, next)};
  return d;
}

std::vector<ElementId> ListStructure::conflicts_with(const Range& r) const {
  const KeyRange& q = std::get<KeyRange>(r);
  // Walk rightward from just before q.lo; everything intersecting q is one
  // contiguous run of the list.
  ElementId node = neg_node_;
  if (q.lo.kind >= 0) {
    auto it = q.lo.kind == 0 ? key_nodes_.lower_bound(q.lo.k) : key_nodes_.end();
    if (it != key_nodes_.begin()) {
      --it;
      node = it->second;
    }
  }
  std::vector<ElementId> out;
  ElementId via = kNoElement;
  while (true) {
    const KeyRange& nr = std::get<KeyRange>(graph_.at(node).range);
    if (nr.intersects(q)) out.push_back(node);
    if (bound_cmp(nr.lo, q.hi) > 0) break;  // walked past the query
    ElementId right = kNoElement;
    for (ElementId l : graph_.links_of(node))
      if (l != via && bound_cmp(std::get<KeyRange>(graph_.at(l).range).lo, nr.lo) == 0) right = l;
    if (right == kNoElement) break;
    if (std::get<KeyRange>(graph_.at(right).range).intersects(q)) out.push_back(right);
    via = right;
    node = graph_.other_end(right, node);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> ListStructure::ordered_elements() const {
  std::vector<ElementId> out;
  ElementId node = neg_node_;
  ElementId via = kNoElement;
  while (true) {
    out.push_back(node);
    ElementId next_link = kNoElement;
    for (ElementId l : graph_.links_of(node))
      if (l != via) {
        const KeyRange& lr = std::get<KeyRange>(graph_.at(l).range);
        if (bound_cmp(lr.lo, std::get<KeyRange>(graph_.at(node).range).lo) == 0) next_link = l;
      }
    if (next_link == kNoElement) break;
    out.push_back(next_link);
    via = next_link;
    node = graph_.other_end(next_link, node);
  }
  return out;
}

}  // namespace skipweb
