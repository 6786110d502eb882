#include "skipweb/universe.hpp"

#include <algorithm>
#include <sstream>

#include "skipweb/geom.hpp"

namespace skipweb {

bool item_less(const Item& a, const Item& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  switch (a.index()) {
    case 0: return std::get<Key>(a) < std::get<Key>(b);
    case 1: return std::get<PointD>(a) < std::get<PointD>(b);
    case 2: return std::get<std::string>(a) < std::get<std::string>(b);
    default: return std::get<Segment>(a) < std::get<Segment>(b);
  }
}

bool item_equal(const Item& a, const Item& b) { return !item_less(a, b) && !item_less(b, a); }

std::string item_to_string(const Item& it) {
  std::ostringstream os;
  switch (it.index()) {
    case 0: os << std::get<Key>(it); break;
    case 1: {
      const PointD& p = std::get<PointD>(it);
      os << "(";
      for (std::size_t a = 0; a < p.coords.size(); ++a)
        os << (a ? "," : "") << p.coords[a].to_string();
      os << ")";
      break;
    }
    case 2: os << std::get<std::string>(it); break;
    default: {
      const Segment& s = std::get<Segment>(it);
      os << s.x1 << "," << s.y1 << "," << s.x2 << "," << s.y2;
      break;
    }
  }
  return os.str();
}

void validate_item(const Universe& u, const Item& x) {
  switch (u.kind) {
    case UniverseKind::TotalOrder:
      if (!std::holds_alternative<Key>(x)) fail(Errc::InvalidItem, "expected an ordered key");
      return;
    case UniverseKind::PointsD: {
      if (!std::holds_alternative<PointD>(x)) fail(Errc::InvalidItem, "expected a point");
      const PointD& p = std::get<PointD>(x);
      if (static_cast<int>(p.coords.size()) != u.dim)
        fail(Errc::InvalidItem, "point dimension mismatch");
      for (const BitKey& c : p.coords)
        if (c.size() != u.coord_bits) fail(Errc::PointOutsideBounds, "coordinate resolution mismatch");
      return;
    }
    case UniverseKind::Strings: {
      if (!std::holds_alternative<std::string>(x)) fail(Errc::InvalidItem, "expected a string");
      const std::string& s = std::get<std::string>(x);
      for (char c : s)
        if (u.alphabet.find(c) == std::string::npos)
          fail(Errc::SymbolOutsideAlphabet, std::string("symbol '") + c + "' not in alphabet");
      return;
    }
    case UniverseKind::Segments2D: {
      if (!std::holds_alternative<Segment>(x)) fail(Errc::InvalidItem, "expected a segment");
      const Segment& s = std::get<Segment>(x);
      if (s.x1 >= s.x2) fail(Errc::DegenerateInput, "segment endpoints must have distinct x (x1 < x2)");
      if (!u.bbox.contains(s.x1, s.y1) || !u.bbox.contains(s.x2, s.y2))
        fail(Errc::InvalidItem, "segment endpoint outside the bounding box");
      if (std::max({std::abs(s.x1), std::abs(s.y1), std::abs(s.x2), std::abs(s.y2)}) > kCoordLimit)
        fail(Errc::InvalidItem, "segment coordinate beyond exact-arithmetic limit");
      return;
    }
  }
}

GroundSet::GroundSet(Universe universe, std::vector<Item> items)
    : universe_(std::move(universe)), items_(std::move(items)) {
  for (const Item& x : items_) validate_item(universe_, x);
  std::sort(items_.begin(), items_.end(), item_less);
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (item_equal(items_[i - 1], items_[i])) {
      switch (universe_.kind) {
        case UniverseKind::TotalOrder: fail(Errc::DuplicateKey, item_to_string(items_[i]));
        case UniverseKind::PointsD: fail(Errc::DuplicatePoint, item_to_string(items_[i]));
        case UniverseKind::Strings: fail(Errc::DuplicateString, item_to_string(items_[i]));
        default: fail(Errc::DuplicateItem, item_to_string(items_[i]));
      }
    }
  }
  if (universe_.kind == UniverseKind::Segments2D) {
    // Pairwise non-crossing is a hard precondition for trapezoidal maps.
    std::vector<std::int64_t> xs;
    for (const Item& it : items_) {
      const Segment& s = std::get<Segment>(it);
      xs.push_back(s.x1);
      xs.push_back(s.x2);
    }
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
      fail(Errc::DegenerateInput, "endpoint x-coordinates must be pairwise distinct");
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const Segment& a = std::get<Segment>(items_[i]);
      for (std::size_t j = i + 1; j < items_.size(); ++j) {
        const Segment& b = std::get<Segment>(items_[j]);
        if (segments_intersect(a, b))
          fail(Errc::CrossingSegments,
               item_to_string(items_[i]) + " x " + item_to_string(items_[j]));
      }
    }
  }
}

GroundSet GroundSet::trusted(Universe universe, std::vector<Item> sorted_items) {
  GroundSet g;
  g.universe_ = std::move(universe);
  g.items_ = std::move(sorted_items);
  return g;
}

bool GroundSet::contains(const Item& x) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), x, item_less);
  return it != items_.end() && item_equal(*it, x);
}

}  // namespace skipweb
