#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "skipweb/bitkey.hpp"
#include "skipweb/errors.hpp"
#include "skipweb/geom.hpp"

namespace skipweb {

enum class UniverseKind { TotalOrder, PointsD, Strings, Segments2D };

inline const char* universe_kind_name(UniverseKind k) {
  switch (k) {
    case UniverseKind::TotalOrder: return "total_order";
    case UniverseKind::PointsD: return "points_d";
    case UniverseKind::Strings: return "strings";
    case UniverseKind::Segments2D: return "segments_2d";
  }
  return "?";
}

using Key = std::int64_t;

struct PointD {
  std::vector<BitKey> coords;  // one BitKey per axis, all the same length

  bool operator==(const PointD& o) const { return coords == o.coords; }
  bool operator<(const PointD& o) const {
    // z-order (Morton) comparison: the axis holding the globally most
    // significant differing bit decides; ties broken by lower axis index.
    std::uint32_t best = coords.empty() ? 0 : coords[0].size();
    std::size_t best_axis = coords.size();
    for (std::size_t a = 0; a < coords.size(); ++a) {
      std::uint32_t d = coords[a].first_diff(o.coords[a]);
      if (d < best) {
        best = d;
        best_axis = a;
      }
    }
    if (best_axis == coords.size()) return false;  // equal
    return coords[best_axis].bit(best) < o.coords[best_axis].bit(best);
  }
};

// The trie terminator: appended to every stored string so that no stored
// string is a proper prefix of another inside the structure.
inline constexpr char kTerminator = '$';

struct Universe {
  UniverseKind kind = UniverseKind::TotalOrder;
  int dim = 2;                  // PointsD
  std::uint32_t coord_bits = 32;  // PointsD resolution per axis
  std::string alphabet = "acgt";  // Strings
  BBox bbox;                    // Segments2D

  static Universe total_order() { return Universe{UniverseKind::TotalOrder, 0, 0, "", {}}; }
  static Universe points(int dim, std::uint32_t coord_bits) {
    Universe u;
    u.kind = UniverseKind::PointsD;
    u.dim = dim;
    u.coord_bits = coord_bits;
    return u;
  }
  static Universe strings(std::string alphabet) {
    Universe u;
    u.kind = UniverseKind::Strings;
    u.alphabet = std::move(alphabet);
    return u;
  }
  static Universe segments(BBox box) {
    Universe u;
    u.kind = UniverseKind::Segments2D;
    u.bbox = box;
    return u;
  }

  bool compatible(const Universe& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case UniverseKind::TotalOrder: return true;
      case UniverseKind::PointsD: return dim == o.dim && coord_bits == o.coord_bits;
      case UniverseKind::Strings: return alphabet == o.alphabet;
      case UniverseKind::Segments2D: return bbox == o.bbox;
    }
    return false;
  }
};

using Item = std::variant<Key, PointD, std::string, Segment>;

// A query point of the universe: a key, a point, a string, or a planar point.
using Query = std::variant<Key, PointD, std::string, PointXY>;

// Canonical item order: sorted keys, z-order points, lexicographic strings,
// endpoint-lexicographic segments.  Random level bits are always drawn in this
// order, which is what makes construction reproducible.
bool item_less(const Item& a, const Item& b);
bool item_equal(const Item& a, const Item& b);
std::string item_to_string(const Item& it);

class GroundSet {
 public:
  GroundSet() = default;
  // Validates items against the universe, sorts canonically, rejects duplicates.
  GroundSet(Universe universe, std::vector<Item> items);

  // For canonically sorted subsets of an already validated set (halving and
  // level construction); skips the quadratic segment checks.
  static GroundSet trusted(Universe universe, std::vector<Item> sorted_items);

  const Universe& universe() const { return universe_; }
  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool contains(const Item& x) const;

 private:
  Universe universe_;
  std::vector<Item> items_;  // canonically sorted, duplicate-free
};

void validate_item(const Universe& u, const Item& x);

}  // namespace skipweb
