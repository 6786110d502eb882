#include "skipweb/structure.hpp"

#include "skipweb/errors.hpp"
#include "skipweb/list1d.hpp"
#include "skipweb/quadtree.hpp"
#include "skipweb/trapmap.hpp"
#include "skipweb/trie.hpp"

namespace skipweb {

LocateResult Structure::finish_locate(ElementId at, const Query& q) const {
  LocateResult r;
  r.element = at;
  r.exact = range_contains(graph_.at(at).range, q) && !graph_.at(at).is_link;
  return r;
}

LocateResult Structure::locate(const Query& q, ElementId start) const {
  ElementId at = start;
  // The walk strictly progresses; the bound is a guard against wiring bugs.
  for (std::size_t step = 0; step <= graph_.capacity() + 1; ++step) {
    ElementId next = locate_step(at, q);
    if (next == at) return finish_locate(at, q);
    at = next;
  }
  fail(Errc::UnresolvableHyperlink, "locate walk did not terminate");
}

ElementId Structure::pick_entry(const std::vector<ElementId>& candidates, const Query& q) const {
  for (ElementId c : candidates)
    if (graph_.alive(c) && range_contains(graph_.at(c).range, q)) return c;
  return candidates.empty() ? kNoElement : candidates.front();
}

std::vector<ElementId> Structure::conflicts_brute(const Range& r) const {
  std::vector<ElementId> out;
  for (ElementId i = 0; i < graph_.capacity(); ++i)
    if (graph_.alive(i) && ranges_intersect(graph_.at(i).range, r)) out.push_back(i);
  return out;
}

std::vector<ElementId> Structure::conflicts_with(const Range& r) const { return conflicts_brute(r); }

std::unique_ptr<Structure> build_structure(const Universe& u, const GroundSet& s) {
  if (!u.compatible(s.universe())) fail(Errc::UniverseMismatch, "ground set built for another universe");
  switch (u.kind) {
    case UniverseKind::TotalOrder: return std::make_unique<ListStructure>(u, s);
    case UniverseKind::PointsD: return std::make_unique<QuadtreeStructure>(u, s);
    case UniverseKind::Strings: return std::make_unique<TrieStructure>(u, s);
    case UniverseKind::Segments2D: return std::make_unique<TrapMapStructure>(u, s);
  }
  fail(Errc::InvalidItem, "unknown universe kind");
}

}  // namespace skipweb
