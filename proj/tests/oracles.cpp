#include "oracles.hpp"

#include <algorithm>

#include "skipweb/errors.hpp"

namespace skipweb::testing {

namespace {

// Mirrors LinkStructure::fingerprint: sorted element keys, links annotated
// with their endpoint keys.
struct FingerprintBuilder {
  std::vector<std::string> entries;
  void node(const Range& r) { entries.push_back("N:" + range_canonical(r)); }
  void link(const Range& r, const Range& a, const Range& b) {
    std::string ka = "N:" + range_canonical(a);
    std::string kb = "N:" + range_canonical(b);
    if (kb < ka) std::swap(ka, kb);
    entries.push_back("L:" + range_canonical(r) + "<" + ka + "><" + kb + ">");
  }
  std::string done() {
    std::sort(entries.begin(), entries.end());
    std::string out;
    for (const std::string& e : entries) {
      out += e;
      out += '\n';
    }
    return out;
  }
};

bool same_quadrant(const PointD& a, const PointD& b, std::uint32_t depth_plus_one) {
  for (std::size_t ax = 0; ax < a.coords.size(); ++ax)
    if (!a.coords[ax].prefix_equals(b.coords[ax], depth_plus_one)) return false;
  return true;
}

std::unique_ptr<OrNode> build_uncompressed(const std::vector<const PointD*>& pts,
                                           std::uint32_t depth, std::uint32_t max_depth) {
  auto n = std::make_unique<OrNode>();
  n->corner = *pts[0];
  n->depth = depth;
  if (pts.size() == 1) {
    n->leaf_like = true;
    return n;
  }
  if (depth >= max_depth) fail(Errc::DuplicatePoint, "subdivision bottomed out");
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i + 1;
    while (j < pts.size() && same_quadrant(*pts[i], *pts[j], depth + 1)) ++j;
    std::vector<const PointD*> group(pts.begin() + i, pts.begin() + j);
    n->children.push_back(build_uncompressed(group, depth + 1, max_depth));
    i = j;
  }
  return n;
}

void compress(std::unique_ptr<OrNode>& n, bool is_root) {
  for (auto& c : n->children) compress(c, false);
  if (!is_root && !n->leaf_like && n->children.size() == 1) n = std::move(n->children[0]);
}

void emit(const OrNode& n, FingerprintBuilder& fb) {
  Range mine = CellRange{n.corner, n.depth};
  fb.node(mine);
  for (const auto& c : n.children) {
    Range child = CellRange{c->corner, c->depth};
    fb.link(child, mine, child);
    emit(*c, fb);
  }
}

std::unique_ptr<OrNode> oracle_tree(const Universe& u, const std::vector<PointD>& pts_in) {
  std::vector<PointD> pts = pts_in;
  std::sort(pts.begin(), pts.end());
  PointD origin;
  for (int a = 0; a < u.dim; ++a) origin.coords.push_back(BitKey::zeros(u.coord_bits));
  if (pts.empty()) {
    auto root = std::make_unique<OrNode>();
    root->corner = origin;
    root->depth = 0;
    return root;
  }
  std::vector<const PointD*> ptrs;
  for (const PointD& p : pts) ptrs.push_back(&p);
  auto root = build_uncompressed(ptrs, 0, u.coord_bits);
  compress(root, true);
  return root;
}

}  // namespace

std::string quadtree_oracle_fingerprint(const Universe& u, const std::vector<PointD>& pts) {
  auto root = oracle_tree(u, pts);
  FingerprintBuilder fb;
  emit(*root, fb);
  return fb.done();
}

CellRange quadtree_oracle_locate(const Universe& u, const std::vector<PointD>& pts,
                                 const PointD& q) {
  auto root = oracle_tree(u, pts);
  CellRange best{root->corner, root->depth};
  std::vector<const OrNode*> stack = {root.get()};
  while (!stack.empty()) {
    const OrNode* n = stack.back();
    stack.pop_back();
    CellRange c{n->corner, n->depth};
    if (!c.contains_point(q)) continue;
    if (c.depth >= best.depth) best = c;
    for (const auto& child : n->children) stack.push_back(child.get());
  }
  return best;
}

std::string trie_oracle_fingerprint(const std::vector<std::string>& raw_strings) {
  std::map<std::string, std::set<std::string>> kids;
  std::set<std::string> nodes = {""};
  for (const std::string& raw : raw_strings) {
    std::string s = raw + kTerminator;
    for (std::size_t i = 1; i <= s.size(); ++i) {
      nodes.insert(s.substr(0, i));
      kids[s.substr(0, i - 1)].insert(s.substr(0, i));
    }
  }
  auto kept = [&](const std::string& n) {
    return n.empty() || kids[n].size() != 1;
  };
  FingerprintBuilder fb;
  for (const std::string& n : nodes) {
    if (!kept(n)) continue;
    fb.node(StringRange{n, ""});
    for (const std::string& first : kids[n]) {
      std::string v = first;
      while (!kept(v)) v = *kids[v].begin();
      fb.link(StringRange{n, v.substr(n.size())}, StringRange{n, ""}, StringRange{v, ""});
    }
  }
  return fb.done();
}

std::vector<TrapRange> trap_oracle_cells(const std::vector<Segment>& segs, const BBox& box) {
  Segment btop{box.xmin, box.ymax, box.xmax, box.ymax};
  Segment bbot{box.xmin, box.ymin, box.xmax, box.ymin};

  std::vector<std::int64_t> xs = {box.xmin, box.xmax};
  for (const Segment& s : segs) {
    xs.push_back(s.x1);
    xs.push_back(s.x2);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  struct Open {
    Segment top, bottom;
    bool top_box, bottom_box;
    std::int64_t lx;
  };
  std::vector<Open> active;
  std::vector<TrapRange> out;

  for (std::size_t si = 0; si + 1 < xs.size(); ++si) {
    std::int64_t xl = xs[si], xr = xs[si + 1];
    // Boundaries crossing this slab, bottom to top.
    struct B {
      Segment s;
      bool box;
    };
    std::vector<B> bounds = {{bbot, true}};
    for (const Segment& s : segs)
      if (s.x1 <= xl && s.x2 >= xr) bounds.push_back({s, false});
    bounds.push_back({btop, true});
    i128 p = i128(xl) + i128(xr), q = 2;
    std::sort(bounds.begin(), bounds.end(),
              [&](const B& a, const B& b) { return compare_segments_at(a.s, b.s, p, q) < 0; });

    std::vector<Open> next;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
      next.push_back(Open{bounds[i + 1].s, bounds[i].s, bounds[i + 1].box, bounds[i].box, xl});

    // Merge with the still-open cells: same boundaries and no wall cutting the
    // gap at xl (the wall at xl comes from the unique endpoint there).
    std::int64_t ey = 0;
    bool have_endpoint = false;
    for (const Segment& s : segs) {
      if (s.x1 == xl) {
        ey = s.y1;
        have_endpoint = true;
      }
      if (s.x2 == xl) {
        ey = s.y2;
        have_endpoint = true;
      }
    }
    for (Open& cell : next) {
      bool merged = false;
      for (std::size_t ai = 0; ai < active.size(); ++ai) {
        const Open& prev = active[ai];
        if (!(prev.top == cell.top && prev.bottom == cell.bottom && prev.top_box == cell.top_box &&
              prev.bottom_box == cell.bottom_box))
          continue;
        bool cut = false;
        if (have_endpoint) {
          bool below_top = side_of_segment_at(cell.top, xl, 1, ey, 1) > 0;
          bool above_bot = side_of_segment_at(cell.bottom, xl, 1, ey, 1) < 0;
          cut = below_top && above_bot;
        }
        if (!cut) {
          cell.lx = prev.lx;
          merged = true;
        }
        active.erase(active.begin() + ai);
        break;
      }
      (void)merged;
    }
    // Cells left in `active` close at xl.
    for (const Open& o : active)
      out.push_back(TrapRange{false, o.top, o.bottom, o.top_box, o.bottom_box, o.lx, xl});
    active = std::move(next);
  }
  for (const Open& o : active)
    out.push_back(TrapRange{false, o.top, o.bottom, o.top_box, o.bottom_box, o.lx, box.xmax});
  return out;
}

TrapRange trap_oracle_locate(const std::vector<TrapRange>& cells, const PointXY& q) {
  for (const TrapRange& t : cells)
    if (t.contains_interior(q)) return t;
  fail(Errc::OnBoundary, "oracle: no cell strictly contains the probe");
}

std::string trap_cells_fingerprint(std::vector<TrapRange> cells) {
  std::vector<std::string> keys;
  for (const TrapRange& t : cells) keys.push_back(range_canonical(Range{t}));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const std::string& k : keys) {
    out += k;
    out += '\n';
  }
  return out;
}

}  // namespace skipweb::testing
