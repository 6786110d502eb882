#include "skipweb/generators.hpp"

#include <algorithm>
#include <set>

#include "skipweb/errors.hpp"

namespace skipweb {

namespace {

constexpr std::size_t kStringLen = 32;

BitKey random_bitkey(std::uint32_t nbits, Rng& rng) {
  std::vector<std::uint64_t> words((nbits + 63) / 64);
  for (std::uint64_t& w : words) w = rng.next_u64();
  return BitKey::from_words(nbits, std::move(words));
}

}  // namespace

Item random_item(const Universe& u, Rng& rng) {
  switch (u.kind) {
    case UniverseKind::TotalOrder:
      return Item{static_cast<Key>(rng.next_below(static_cast<std::uint64_t>(kKeySpan)))};
    case UniverseKind::PointsD: {
      PointD p;
      for (int a = 0; a < u.dim; ++a) p.coords.push_back(random_bitkey(u.coord_bits, rng));
      return Item{std::move(p)};
    }
    case UniverseKind::Strings: {
      std::string s(kStringLen, u.alphabet[0]);
      for (char& c : s) c = u.alphabet[rng.next_below(u.alphabet.size())];
      return Item{std::move(s)};
    }
    case UniverseKind::Segments2D:
      fail(Errc::InvalidItem, "segments are drawn per set, not per item");
  }
  fail(Errc::InvalidItem, "unknown universe");
}

std::vector<Segment> random_segments(std::size_t n, const BBox& box, Rng& rng) {
  // One horizontal band per segment keeps the set non-crossing; distinct
  // endpoint x-coordinates keep it in general position.
  if (n == 0) return {};
  std::int64_t height = box.ymax - box.ymin;
  std::int64_t band = height / static_cast<std::int64_t>(n);
  if (band < 4) fail(Errc::DegenerateInput, "bounding box too small for that many segments");

  std::set<std::int64_t> xs;
  std::uint64_t span = static_cast<std::uint64_t>(box.xmax - box.xmin - 1);
  while (xs.size() < 2 * n)
    xs.insert(box.xmin + 1 + static_cast<std::int64_t>(rng.next_below(span - 1)));
  std::vector<std::int64_t> xv(xs.begin(), xs.end());
  // Random pairing of the 2n abscissas gives nesting and overlap variety.
  for (std::size_t i = xv.size(); i > 1; --i) std::swap(xv[i - 1], xv[rng.next_below(i)]);

  std::vector<std::size_t> bands(n);
  for (std::size_t i = 0; i < n; ++i) bands[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(bands[i - 1], bands[rng.next_below(i)]);

  std::vector<Segment> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t ylo = box.ymin + static_cast<std::int64_t>(bands[i]) * band;
    Segment s;
    s.x1 = xv[2 * i];
    s.x2 = xv[2 * i + 1];
    s.y1 = ylo + 1 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(band - 2)));
    s.y2 = ylo + 1 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(band - 2)));
    s.normalize();
    out.push_back(s);
  }
  return out;
}

GroundSet random_ground_set(const Universe& u, std::size_t n, Rng& rng) {
  if (u.kind == UniverseKind::Segments2D) {
    std::vector<Item> items;
    for (Segment& s : random_segments(n, u.bbox, rng)) items.push_back(s);
    return GroundSet(u, std::move(items));
  }
  struct Cmp {
    bool operator()(const Item& a, const Item& b) const { return item_less(a, b); }
  };
  std::set<Item, Cmp> items;
  while (items.size() < n) items.insert(random_item(u, rng));
  return GroundSet(u, std::vector<Item>(items.begin(), items.end()));
}

Query random_query(const Universe& u, Rng& rng) {
  switch (u.kind) {
    case UniverseKind::TotalOrder:
      return Query{static_cast<Key>(rng.next_below(static_cast<std::uint64_t>(kKeySpan)))};
    case UniverseKind::PointsD: {
      PointD p;
      for (int a = 0; a < u.dim; ++a) p.coords.push_back(random_bitkey(u.coord_bits, rng));
      return Query{std::move(p)};
    }
    case UniverseKind::Strings: {
      std::string s(kStringLen, u.alphabet[0]);
      for (char& c : s) c = u.alphabet[rng.next_below(u.alphabet.size())];
      return Query{std::move(s)};
    }
    case UniverseKind::Segments2D: {
      PointXY p;
      p.x = u.bbox.xmin + 1 +
            static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(u.bbox.xmax - u.bbox.xmin - 1)));
      p.y = u.bbox.ymin + 1 +
            static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(u.bbox.ymax - u.bbox.ymin - 1)));
      return Query{p};
    }
  }
  fail(Errc::InvalidItem, "unknown universe");
}

GroundSet adversarial_chain_points(const Universe& u, std::size_t n) {
  if (u.coord_bits < n + 2) fail(Errc::PointOutsideBounds, "coord_bits too small for the chain");
  std::vector<Item> items;
  for (std::size_t j = 0; j < n; ++j) {
    // All-zero prefix of length j, then ones: point 2^(L-j) - 1 on every axis.
    BitKey k = BitKey::zeros(u.coord_bits);
    for (std::uint32_t i = static_cast<std::uint32_t>(j); i < u.coord_bits; ++i) k.set_bit(i, 1);
    PointD p;
    for (int a = 0; a < u.dim; ++a) p.coords.push_back(k);
    items.push_back(std::move(p));
  }
  return GroundSet(u, std::move(items));
}

}  // namespace skipweb
