#include "skipweb/link_structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace skipweb {

void LinkStructure::retire(ElementId id) {
  Element& e = elements_[id];
  if (!e.alive) return;
  e.alive = false;
  if (e.is_link)
    --live_links_;
  else
    --live_nodes_;
}

std::vector<ElementId> LinkStructure::links_of(ElementId node) const {
  std::vector<ElementId> out;
  for (ElementId l : incident_[node])
    if (elements_[l].alive) out.push_back(l);
  return out;
}

std::vector<ElementId> LinkStructure::live_ids() const {
  std::vector<ElementId> out;
  out.reserve(live_count());
  for (ElementId i = 0; i < elements_.size(); ++i)
    if (elements_[i].alive) out.push_back(i);
  return out;
}

std::string LinkStructure::element_key(ElementId id) const {
  const Element& e = elements_[id];
  return (e.is_link ? "L:" : "N:") + range_canonical(e.range);
}

bool LinkStructure::structurally_equal(const LinkStructure& o) const {
  return fingerprint() == o.fingerprint();
}

std::string LinkStructure::fingerprint() const {
  // Element keys plus, for links, both endpoint keys; sorted into a canonical
  // multiset encoding.  Ids do not appear, so rebuilds and update histories
  // compare by content alone.
  std::vector<std::string> entries;
  entries.reserve(live_count());
  for (ElementId i = 0; i < elements_.size(); ++i) {
    const Element& e = elements_[i];
    if (!e.alive) continue;
    if (!e.is_link) {
      entries.push_back(element_key(i));
    } else {
      std::string ka = element_key(e.end_a), kb = element_key(e.end_b);
      if (kb < ka) std::swap(ka, kb);
      entries.push_back(element_key(i) + "<" + ka + "><" + kb + ">");
    }
  }
  std::sort(entries.begin(), entries.end());
  std::string out;
  for (const std::string& s : entries) {
    out += s;
    out += '\n';
  }
  return out;
}

}  // namespace skipweb
