#include "skipweb/range.hpp"

#include <cstring>
#include <sstream>

#include "skipweb/errors.hpp"

namespace skipweb {

namespace {

// Clipped linear boundary comparison at rational abscissa p/q (q > 0): sign of
// (upper(x) - lower(x)).
int boundary_gap_sign(const Segment& upper, const Segment& lower, i128 p, i128 q) {
  return compare_segments_at(upper, lower, p, q);
}

}  // namespace

bool TrapRange::interiors_overlap(const TrapRange& o) const {
  if (is_wall || o.is_wall) return false;
  std::int64_t xl = std::max(lx, o.lx);
  std::int64_t xr = std::min(rx, o.rx);
  if (xl >= xr) return false;
  // All four boundaries come from non-crossing families, so their vertical
  // order is constant over the open overlap; the midpoint decides.
  i128 p = i128(xl) + i128(xr);
  i128 q = 2;
  if (boundary_gap_sign(o.top, bottom, p, q) <= 0) return false;
  if (boundary_gap_sign(top, o.bottom, p, q) <= 0) return false;
  return true;
}

bool TrapRange::contains_interior(const PointXY& qp) const {
  if (is_wall) return false;
  if (qp.x <= lx || qp.x >= rx) return false;
  if (side_of_segment_at(top, qp.x, 1, qp.y, 1) <= 0) return false;     // top strictly above
  if (side_of_segment_at(bottom, qp.x, 1, qp.y, 1) >= 0) return false;  // bottom strictly below
  return true;
}

bool TrapRange::on_boundary(const PointXY& qp) const {
  if (is_wall) return false;
  if (qp.x < lx || qp.x > rx) return false;
  if (side_of_segment_at(top, qp.x, 1, qp.y, 1) < 0) return false;
  if (side_of_segment_at(bottom, qp.x, 1, qp.y, 1) > 0) return false;
  return !contains_interior(qp);
}

bool ranges_intersect(const Range& a, const Range& b) {
  if (a.index() != b.index()) fail(Errc::UniverseMismatch, "ranges from different universes");
  switch (a.index()) {
    case 0: return std::get<KeyRange>(a).intersects(std::get<KeyRange>(b));
    case 1: return std::get<CellRange>(a).nested_with(std::get<CellRange>(b));
    case 2: return std::get<StringRange>(a).intersects(std::get<StringRange>(b));
    default: return std::get<TrapRange>(a).interiors_overlap(std::get<TrapRange>(b));
  }
}

bool range_contains(const Range& r, const Query& q) {
  switch (r.index()) {
    case 0:
      if (!std::holds_alternative<Key>(q)) fail(Errc::UniverseMismatch, "query is not a key");
      return std::get<KeyRange>(r).contains(std::get<Key>(q));
    case 1:
      if (!std::holds_alternative<PointD>(q)) fail(Errc::UniverseMismatch, "query is not a point");
      return std::get<CellRange>(r).contains_point(std::get<PointD>(q));
    case 2:
      if (!std::holds_alternative<std::string>(q)) fail(Errc::UniverseMismatch, "query is not a string");
      return std::get<StringRange>(r).contains(std::get<std::string>(q));
    default:
      if (!std::holds_alternative<PointXY>(q)) fail(Errc::UniverseMismatch, "query is not a planar point");
      return std::get<TrapRange>(r).contains_interior(std::get<PointXY>(q));
  }
}

namespace {

void encode_bound(std::ostringstream& os, const Bound& b) {
  if (b.kind < 0)
    os << "-oo";
  else if (b.kind > 0)
    os << "+oo";
  else
    os << b.k;
}

void encode_segment(std::ostringstream& os, const Segment& s, bool box) {
  if (box)
    os << "box";
  else
    os << s.x1 << ":" << s.y1 << ":" << s.x2 << ":" << s.y2;
}

}  // namespace

std::string range_canonical(const Range& r) {
  std::ostringstream os;
  switch (r.index()) {
    case 0: {
      const KeyRange& k = std::get<KeyRange>(r);
      os << "K[";
      encode_bound(os, k.lo);
      os << ",";
      encode_bound(os, k.hi);
      os << "]";
      break;
    }
    case 1: {
      const CellRange& c = std::get<CellRange>(r);
      os << "C" << c.depth << "[";
      for (const BitKey& bk : c.corner.coords) {
        os << "/";
        for (std::uint32_t i = 0; i < c.depth && i < bk.size(); ++i) os << (bk.bit(i) ? '1' : '0');
      }
      os << "]";
      break;
    }
    case 2: {
      const StringRange& s = std::get<StringRange>(r);
      os << "S[" << s.base << "|" << s.label << "]";
      break;
    }
    default: {
      const TrapRange& t = std::get<TrapRange>(r);
      os << (t.is_wall ? "W[" : "T[") << t.lx << "," << t.rx << ";";
      encode_segment(os, t.top, t.top_box);
      os << ";";
      encode_segment(os, t.bottom, t.bottom_box);
      os << "]";
      break;
    }
  }
  return os.str();
}

}  // namespace skipweb
