#pragma once

#include <cstdint>
#include <vector>

#include "skipweb/rng.hpp"
#include "skipweb/structure.hpp"

namespace skipweb {

struct ConflictList {
  Range query;
  std::vector<ElementId> elements;  // canonical (ascending id) order
};

// Exhaustive conflict list of q_range against every live node and link of the
// target structure.  Reference semantics: a brute-force scan with the closed
// range predicate (an equal range conflicts with itself).
ConflictList conflict_list(const Range& q_range, const Structure& target);

// Splits s by one fresh random bit per item, drawn in canonical item order.
// Bit 0 sends an item to the first half.
std::pair<GroundSet, GroundSet> halve(const GroundSet& s, Rng& rng);

struct OracleStats {
  std::size_t trials = 0;
  double mean = 0.0;        // mean conflict count
  std::size_t max = 0;
  double stderr_mean = 0.0; // standard error of the mean
  double occupancy_mean = 0.0;  // 1-D only: mean |Q cap S|
  std::vector<std::size_t> histogram;  // conflict count -> frequency
};

struct OracleOptions {
  std::size_t n = 256;
  std::size_t trials = 1000;
  bool degenerate_identity = false;  // T = S instead of a random half
  int threads = 0;                   // 0: library default; 1: serial reference
};

// Monte-Carlo check of the set-halving template: per trial draw S, halve to T,
// draw a query, take the maximal range Q of D(T) the query lands on, and count
// the conflicts of Q against D(S).  For the total order the count follows the
// halving-lemma accounting (nodes by closed containment, link pairs by shared
// interior); for the other universes it is the conflict-list size.
//
// Trials own independent RNG substreams keyed by trial index, so the result is
// identical for any thread count; `halving_oracle_serial` is the plain-loop
// reference used by tests and the scaling benchmark.
OracleStats halving_oracle(const Universe& u, const OracleOptions& opt, std::uint64_t seed);
OracleStats halving_oracle_serial(const Universe& u, const OracleOptions& opt, std::uint64_t seed);

// One oracle trial, exposed so the two drivers above stay in lockstep.
struct TrialOutcome {
  std::size_t conflicts = 0;
  std::size_t occupancy = 0;
};
TrialOutcome halving_trial(const Universe& u, const OracleOptions& opt, std::uint64_t seed,
                           std::uint64_t trial_index);

// Lemma-style conflict count of Q against D(S) (see halving_oracle).
std::size_t lemma_conflict_count(const Range& q_range, const Structure& target);

}  // namespace skipweb
