#pragma once

// Test-only reference implementations, kept independent of the library's
// construction paths on purpose: the quadtree oracle builds the uncompressed
// tree and contracts chains afterwards, the trie oracle builds the
// one-node-per-character trie, and the trapezoid oracle decomposes the plane
// slab by slab and merges.  Tests compare library structures against these.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "skipweb/range.hpp"
#include "skipweb/structure.hpp"
#include "skipweb/trapmap.hpp"
#include "skipweb/universe.hpp"

namespace skipweb::testing {

// ---- quadtree oracle -------------------------------------------------------

struct OrNode {
  PointD corner;
  std::uint32_t depth = 0;
  std::vector<std::unique_ptr<OrNode>> children;
  bool leaf_like = false;  // exactly one point below
};

// Uncompressed subdivision followed by chain contraction; returns the multiset
// fingerprint of the resulting node/link structure (same encoding as
// LinkStructure::fingerprint).
std::string quadtree_oracle_fingerprint(const Universe& u, const std::vector<PointD>& pts);

// Smallest node cell of the compressed oracle tree containing q.
CellRange quadtree_oracle_locate(const Universe& u, const std::vector<PointD>& pts,
                                 const PointD& q);

// ---- trie oracle -----------------------------------------------------------

std::string trie_oracle_fingerprint(const std::vector<std::string>& raw_strings);

// ---- trapezoid oracle ------------------------------------------------------

// Slab decomposition with merges: the full trapezoid set of D(segs).
std::vector<TrapRange> trap_oracle_cells(const std::vector<Segment>& segs, const BBox& box);

// Brute-force location among oracle cells (interior containment).
TrapRange trap_oracle_locate(const std::vector<TrapRange>& cells, const PointXY& q);

// Canonical multiset encoding of trapezoid cells for map comparison.
std::string trap_cells_fingerprint(std::vector<TrapRange> cells);

}  // namespace skipweb::testing
