#include "skipweb/core.hpp"

#include <algorithm>
#include <cmath>

#include "skipweb/generators.hpp"
#include "skipweb/list1d.hpp"
#include "skipweb/trapmap.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skipweb {

ConflictList conflict_list(const Range& q_range, const Structure& target) {
  ConflictList out;
  out.query = q_range;
  out.elements = target.conflicts_brute(q_range);
  return out;
}

std::pair<GroundSet, GroundSet> halve(const GroundSet& s, Rng& rng) {
  std::vector<Item> zero, one;
  for (const Item& it : s.items()) {
    if (rng.next_bit() == 0)
      zero.push_back(it);
    else
      one.push_back(it);
  }
  return {GroundSet::trusted(s.universe(), std::move(zero)),
          GroundSet::trusted(s.universe(), std::move(one))};
}

std::size_t lemma_conflict_count(const Range& q_range, const Structure& target) {
  if (target.kind() != StructureKind::List1D) return target.conflicts_with(q_range).size();
  // Halving-lemma accounting over the total order: nodes conflict by closed
  // containment, two intervals only when their interiors meet.
  const KeyRange& q = std::get<KeyRange>(q_range);
  std::size_t count = 0;
  for (ElementId e : target.conflicts_with(q_range)) {
    const Element& el = target.graph().at(e);
    const KeyRange& r = std::get<KeyRange>(el.range);
    if (!el.is_link || q.is_singleton()) {
      ++count;
    } else if (r.interiors_overlap(q)) {
      ++count;
    }
  }
  return count;
}

namespace {

// The maximal range of D(T) at q.  Exact node hits widen to the outgoing link
// so that the result is always the widest element containing q.
Range maximal_range_at(const Structure& dt, const Query& q) {
  LocateResult loc = dt.locate(q);
  const Element& e = dt.graph().at(loc.element);
  if (dt.kind() == StructureKind::List1D && !e.is_link && loc.exact) {
    for (ElementId l : dt.graph().links_of(loc.element)) {
      const KeyRange& lr = std::get<KeyRange>(dt.graph().at(l).range);
      if (bound_cmp(lr.lo, std::get<KeyRange>(e.range).lo) == 0) return dt.graph().at(l).range;
    }
  }
  return e.range;
}

std::size_t occupancy_in(const GroundSet& s, const KeyRange& q) {
  std::size_t count = 0;
  for (const Item& it : s.items()) {
    Key k = std::get<Key>(it);
    if (bound_cmp_key(q.lo, k) > 0) continue;  // k < lo
    if (bound_cmp_key(q.hi, k) < 0) break;     // k > hi
    ++count;
  }
  return count;
}

}  // namespace

TrialOutcome halving_trial(const Universe& u, const OracleOptions& opt, std::uint64_t seed,
                           std::uint64_t trial_index) {
  Rng rng = substream(seed, "halving-oracle", trial_index);
  GroundSet s = random_ground_set(u, opt.n, rng);
  GroundSet t = opt.degenerate_identity ? s : halve(s, rng).first;

  std::unique_ptr<Structure> dt = build_structure(u, t);
  std::unique_ptr<Structure> ds = build_structure(u, s);

  Query q = random_query(u, rng);
  if (u.kind == UniverseKind::Segments2D) {
    const auto* tm = static_cast<const TrapMapStructure*>(dt.get());
    const auto* sm = static_cast<const TrapMapStructure*>(ds.get());
    while (tm->query_on_boundary(std::get<PointXY>(q)) ||
           sm->query_on_boundary(std::get<PointXY>(q)))
      q = random_query(u, rng);
  }

  Range qr = maximal_range_at(*dt, q);
  TrialOutcome out;
  out.conflicts = lemma_conflict_count(qr, *ds);
  if (u.kind == UniverseKind::TotalOrder) out.occupancy = occupancy_in(s, std::get<KeyRange>(qr));
  return out;
}

namespace {

OracleStats reduce_outcomes(const std::vector<TrialOutcome>& res) {
  OracleStats st;
  st.trials = res.size();
  st.histogram.assign(65, 0);
  double sum = 0, sum_occ = 0;
  for (const TrialOutcome& t : res) {
    sum += static_cast<double>(t.conflicts);
    sum_occ += static_cast<double>(t.occupancy);
    st.max = std::max(st.max, t.conflicts);
    st.histogram[std::min<std::size_t>(t.conflicts, 64)]++;
  }
  st.mean = sum / static_cast<double>(st.trials);
  st.occupancy_mean = sum_occ / static_cast<double>(st.trials);
  double var = 0;
  for (const TrialOutcome& t : res) {
    double d = static_cast<double>(t.conflicts) - st.mean;
    var += d * d;
  }
  if (st.trials > 1)
    st.stderr_mean = std::sqrt(var / (static_cast<double>(st.trials) *
                                      static_cast<double>(st.trials - 1)));
  return st;
}

}  // namespace

OracleStats halving_oracle_serial(const Universe& u, const OracleOptions& opt, std::uint64_t seed) {
  std::vector<TrialOutcome> res(opt.trials);
  for (std::size_t i = 0; i < opt.trials; ++i) res[i] = halving_trial(u, opt, seed, i);
  return reduce_outcomes(res);
}

OracleStats halving_oracle(const Universe& u, const OracleOptions& opt, std::uint64_t seed) {
  std::vector<TrialOutcome> res(opt.trials);
#ifdef _OPENMP
  int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(opt.trials); ++i)
    res[static_cast<std::size_t>(i)] = halving_trial(u, opt, seed, static_cast<std::uint64_t>(i));
#else
  for (std::size_t i = 0; i < opt.trials; ++i) res[i] = halving_trial(u, opt, seed, i);
#endif
  return reduce_outcomes(res);
}

}  // namespace skipweb
