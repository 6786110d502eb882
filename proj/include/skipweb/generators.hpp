#pragma once

#include "skipweb/rng.hpp"
#include "skipweb/universe.hpp"

namespace skipweb {

// Random instance and query generators used by the oracle and the benchmark
// driver.  All of them draw only from the given rng, so instances are fully
// determined by (universe, n, seed).

inline constexpr Key kKeySpan = Key{1} << 48;

GroundSet random_ground_set(const Universe& u, std::size_t n, Rng& rng);
Item random_item(const Universe& u, Rng& rng);
Query random_query(const Universe& u, Rng& rng);

// Points forcing a compressed quadtree of depth n: a staircase of nested
// quadrants along the main diagonal.  Requires u.coord_bits >= n + 2.
GroundSet adversarial_chain_points(const Universe& u, std::size_t n);

// Non-crossing segment generator: each segment lives in its own horizontal
// band, with all endpoint x-coordinates distinct (general position).
std::vector<Segment> random_segments(std::size_t n, const BBox& box, Rng& rng);

}  // namespace skipweb
