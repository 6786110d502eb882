#include "skipweb/trie.hpp"

#include <algorithm>

#include "skipweb/errors.hpp"

namespace skipweb {

namespace {

std::size_t lcp_len(const std::string& a, std::size_t a_from, const std::string& b) {
  std::size_t n = std::min(a.size() - a_from, b.size());
  std::size_t i = 0;
  while (i < n && a[a_from + i] == b[i]) ++i;
  return i;
}

bool is_prefix(const std::string& p, const std::string& s) {
  return p.size() <= s.size() && s.compare(0, p.size(), p) == 0;
}

}  // namespace

TrieStructure::TrieStructure(const Universe& u, const GroundSet& s)
    : Structure(u, StructureKind::Trie) {
  root_ = add_trie_node("");
  std::vector<std::string> terminated;
  terminated.reserve(s.size());
  for (const Item& it : s.items()) terminated.push_back(std::get<std::string>(it) + kTerminator);
  std::sort(terminated.begin(), terminated.end());
  for (const std::string& t : terminated) stored_.insert(t);
  if (!terminated.empty()) build_rec(terminated, 0, terminated.size(), 0, root_);
}

ElementId TrieStructure::add_trie_node(std::string str) {
  ElementId id = graph_.add_node(StringRange{std::move(str), ""});
  info_.resize(graph_.capacity());
  return id;
}

ElementId TrieStructure::add_trie_edge(ElementId from, ElementId to, std::string label) {
  char head = label[0];
  ElementId id = graph_.add_link(StringRange{srange(from).base, std::move(label)}, from, to);
  info_.resize(graph_.capacity());
  info_[from].child_edges[head] = id;
  info_[to].parent_edge = id;
  return id;
}

// sorted[lo, hi) all share a prefix of length `depth` equal to the string at
// `parent_node`; groups split on the character at `depth`.
ElementId TrieStructure::build_rec(const std::vector<std::string>& sorted, std::size_t lo,
                                   std::size_t hi, std::size_t depth, ElementId parent_node) {
  std::size_t i = lo;
  while (i < hi) {
    char head = sorted[i][depth];
    std::size_t j = i + 1;
    while (j < hi && sorted[j][depth] == head) ++j;
    if (j - i == 1) {
      ElementId leaf = add_trie_node(sorted[i]);
      add_trie_edge(parent_node, leaf, sorted[i].substr(depth));
    } else {
      // Group lcp: the terminator guarantees it is shorter than every member.
      std::size_t l = sorted[i].size();
      for (std::size_t t = i + 1; t < j; ++t)
        l = std::min(l, depth + lcp_len(sorted[t - 1], depth, sorted[t].substr(depth)));
      ElementId mid = add_trie_node(sorted[i].substr(0, l));
      add_trie_edge(parent_node, mid, sorted[i].substr(depth, l - depth));
      build_rec(sorted, i, j, l, mid);
    }
    i = j;
  }
  return parent_node;
}

std::pair<ElementId, std::size_t> TrieStructure::walk(const std::string& q) const {
  ElementId at = root_;
  std::size_t m = 0;
  while (true) {
    if (m == q.size()) return {at, m};
    auto it = info_[at].child_edges.find(q[m]);
    if (it == info_[at].child_edges.end() || !graph_.alive(it->second)) return {at, m};
    ElementId edge = it->second;
    const std::string& label = srange(edge).label;
    std::size_t t = lcp_len(q, m, label);
    if (t == label.size()) {
      at = graph_.at(edge).end_b;
      m += t;
      continue;
    }
    return {edge, m + t};
  }
}

ElementId TrieStructure::locate_step(ElementId at, const Query& q) const {
  const std::string& s = std::get<std::string>(q);
  const Element& e = graph_.at(at);
  const StringRange& r = srange(at);
  if (!e.is_link) {
    if (!is_prefix(r.base, s)) {
      // Exact hit on a stored string surfaces as its leaf node.
      if (r.base == s + kTerminator) return at;
      ElementId up = info_[at].parent_edge;
      return (up != kNoElement && graph_.alive(up)) ? up : at;
    }
    if (r.base.size() == s.size()) return at;  // query exhausted at this node
    auto it = info_[at].child_edges.find(s[r.base.size()]);
    if (it == info_[at].child_edges.end() || !graph_.alive(it->second)) return at;
    return it->second;
  }
  // On an edge (base, label).
  if (!is_prefix(r.base, s)) return e.end_a;
  std::size_t t = lcp_len(s, r.base.size(), r.label);
  if (t == r.label.size()) return e.end_b;
  std::size_t matched = r.base.size() + t;
  if (matched == s.size() && t + 1 == r.label.size() && r.label[t] == kTerminator)
    return e.end_b;  // stored string equals the query: finish on the leaf
  return at;  // divergence (or exhaustion) inside this edge
}

LocateResult TrieStructure::finish_locate(ElementId at, const Query& q) const {
  const std::string& s = std::get<std::string>(q);
  LocateResult res;
  res.element = at;
  const Element& e = graph_.at(at);
  const StringRange& r = srange(at);
  if (!e.is_link) {
    res.exact = r.base == s + kTerminator;
    res.matched = static_cast<int>(res.exact ? s.size() : lcp_len(s, 0, r.base));
  } else {
    std::size_t t = is_prefix(r.base, s) ? lcp_len(s, r.base.size(), r.label) : 0;
    res.matched = static_cast<int>(is_prefix(r.base, s) ? r.base.size() + t : lcp_len(s, 0, r.base));
    res.exact = false;
  }
  return res;
}

namespace {

// Characters of q reachable inside the element's range; -1 when q's path
// misses the range entirely.
int trie_progress(const StringRange& r, const std::string& q) {
  std::size_t n = std::min(q.size(), r.full().size());
  const std::string f = r.full();
  std::size_t l = 0;
  while (l < n && q[l] == f[l]) ++l;
  if (l < r.base.size()) return -1;
  return static_cast<int>(l);
}

}  // namespace

ElementId TrieStructure::pick_entry(const std::vector<ElementId>& candidates, const Query& q) const {
  const std::string& s = std::get<std::string>(q);
  std::string st = s + kTerminator;
  ElementId best = kNoElement;
  int best_score = -2;
  for (ElementId c : candidates) {
    if (!graph_.alive(c)) continue;
    int score = trie_progress(srange(c), st);
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  }
  if (best != kNoElement) return best;
  return candidates.empty() ? kNoElement : candidates.front();
}

bool TrieStructure::contains_item(const Item& x) const {
  return stored_.count(std::get<std::string>(x) + kTerminator) > 0;
}

UpdateDelta TrieStructure::insert_item(const Item& x) {
  validate_item(graph_.universe(), x);
  const std::string raw = std::get<std::string>(x);
  const std::string s = raw + kTerminator;
  if (stored_.count(s)) fail(Errc::DuplicateString, raw);

  UpdateDelta d;
  auto [at, matched] = walk(s);
  if (!graph_.at(at).is_link) {
    // Diverged at a node: hang a fresh leaf edge.
    ElementId leaf = add_trie_node(s);
    ElementId e = add_trie_edge(at, leaf, s.substr(matched));
    d.created = {leaf, e};
  } else {
    // Diverged inside an edge: split it, then hang the leaf.
    const StringRange er = srange(at);
    ElementId parent = graph_.at(at).end_a;
    ElementId child = graph_.at(at).end_b;
    std::size_t t = matched - er.base.size();
    d.replaced = {at};
    graph_.retire(at);
    info_[parent].child_edges.erase(er.label[0]);

    ElementId mid = add_trie_node(s.substr(0, matched));
    ElementId e1 = add_trie_edge(parent, mid, er.label.substr(0, t));
    ElementId e2 = add_trie_edge(mid, child, er.label.substr(t));
    ElementId leaf = add_trie_node(s);
    ElementId e3 = add_trie_edge(mid, leaf, s.substr(matched));
    d.created = {mid, e1, e2, leaf, e3};
  }
  stored_.insert(s);
  return d;
}

UpdateDelta TrieStructure::erase_item(const Item& x) {
  const std::string raw = std::get<std::string>(x);
  const std::string s = raw + kTerminator;
  if (!stored_.count(s)) fail(Errc::ItemNotFound, raw);

  auto [leaf, matched] = walk(s);
  (void)matched;
  UpdateDelta d;
  ElementId e = info_[leaf].parent_edge;
  ElementId parent = graph_.at(e).end_a;
  d.replaced = {leaf, e};
  graph_.retire(leaf);
  graph_.retire(e);
  info_[parent].child_edges.erase(srange(e).label[0]);

  if (parent != root_ && info_[parent].child_edges.size() == 1) {
    // Merge the unary chain left behind.
    ElementId e2 = info_[parent].child_edges.begin()->second;
    ElementId child = graph_.at(e2).end_b;
    ElementId pe = info_[parent].parent_edge;
    ElementId gp = graph_.at(pe).end_a;
    const std::string lp = srange(pe).label;
    const std::string l2 = srange(e2).label;
    d.replaced.insert(d.replaced.end(), {parent, pe, e2});
    graph_.retire(parent);
    graph_.retire(pe);
    graph_.retire(e2);
    info_[gp].child_edges.erase(lp[0]);
    ElementId merged = add_trie_edge(gp, child, lp + l2);
    d.created = {merged};
  }
  stored_.erase(s);
  std::sort(d.replaced.begin(), d.replaced.end());
  return d;
}

std::vector<ElementId> TrieStructure::conflicts_with(const Range& r) const {
  const StringRange& q = std::get<StringRange>(r);
  const std::string target = q.full();
  // Everything conflicting with q has its base on the path spelling target, so
  // walking that path and testing local elements is exhaustive.
  std::vector<ElementId> out;
  ElementId at = root_;
  std::size_t depth = 0;
  while (true) {
    if (ranges_intersect(graph_.at(at).range, r)) out.push_back(at);
    for (auto& [head, edge] : info_[at].child_edges) {
      if (!graph_.alive(edge)) continue;
      if (ranges_intersect(graph_.at(edge).range, r)) out.push_back(edge);
    }
    if (depth >= target.size()) break;
    auto it = info_[at].child_edges.find(target[depth]);
    if (it == info_[at].child_edges.end() || !graph_.alive(it->second)) break;
    const std::string& label = srange(it->second).label;
    std::size_t t = lcp_len(target, depth, label);
    if (t < label.size()) break;  // target ends or diverges inside this edge
    at = graph_.at(it->second).end_b;
    depth += t;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skipweb
