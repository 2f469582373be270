#include "bicirc/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "bicirc/group_structure.hpp"
#include "bicirc/predicates.hpp"

namespace bicirc {

namespace {

struct Found {
  PermGroup group;
  bool maximal;
};

// Fallback when the element cap is hit: normal closures of single strong generators.
std::vector<Found> closures_of_strong_generators(const PermGroup& aut) {
  std::vector<PermGroup> groups;
  for (const auto& s : aut.chain().strong_generators()) {
    const Permutation seed[] = {s};
    auto closure = normal_closure(aut, seed);
    if (closure.orbit_count() < 3) continue;
    if (std::any_of(groups.begin(), groups.end(), [&](const PermGroup& h) { return same_subgroup(h, closure); }))
      continue;
    groups.push_back(std::move(closure));
  }
  std::vector<Found> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < groups.size() && maximal; ++j)
      if (i != j && groups[j].order() > groups[i].order() && groups[j].contains_group(groups[i])) maximal = false;
    out.push_back({groups[i], maximal});
  }
  return out;
}

ReductionCandidate make_candidate(const Graph& g, const PermGroup& aut, const PermGroup& n, bool maximal,
                                  const ReduceOptions& opts) {
  const SearchOptions search{opts.limits.node_budget};
  ReductionCandidate c;
  c.generators = n.generators();
  c.order = n.order();
  c.orbits = n.orbits();
  c.maximal = maximal;
  try {
    c.cyclic = is_cyclic(n, opts.limits.element_cap);
  } catch (const OrderCapExceeded&) {
  }
  auto q = quotient_graph(g, c.orbits);
  c.quotient = std::move(q.quotient);
  c.cover = std::move(q.cover);
  c.identified = identify_basic(c.quotient, search);
  try {
    const auto induced = induced_action(aut, c.orbits);
    c.quasiprimitive = is_quasiprimitive(induced, opts.limits.element_cap);
    c.biquasiprimitive = is_biquasiprimitive(induced, opts.limits.element_cap);
  } catch (const OrderCapExceeded&) {
  }
  return c;
}

}  // namespace

const ReductionCandidate* ReductionReport::find_candidate(const BigInt& order, const std::string& quotient_certificate,
                                                          bool require_cyclic) const {
  for (const auto& c : candidates) {
    if (c.order != order) continue;
    if (require_cyclic && c.cyclic != true) continue;
    if (canonical_form(c.quotient).certificate == quotient_certificate) return &c;
  }
  return nullptr;
}

ReductionReport reduce(const Graph& g, const PermGroup& aut, const ReduceOptions& opts) {
  const SearchOptions search{opts.limits.node_budget};
  if (g.order() < 3) throw std::invalid_argument("reduce needs at least three vertices");
  if (!is_connected(g)) throw std::invalid_argument("reduce needs a connected graph");
  if (!is_arc_transitive(g, aut)) throw std::invalid_argument("reduce needs an arc-transitive graph");
  if (opts.require_bicirculant && (g.order() % 2 != 0 || !is_bicirculant(g, aut, search)))
    throw std::invalid_argument("reduce needs a bicirculant");

  ReductionReport report;
  report.input = g;
  report.valency = g.degree(0);
  report.aut_order = aut.order();
  report.aut_generators = aut.generators();

  std::vector<Found> found;
  try {
    const auto all = normal_subgroups_with_min_orbits(aut, 3, opts.limits.element_cap);
    const auto maximal = normal_subgroups_with_orbit_bound(aut, 3, opts.limits.element_cap);
    for (const auto& n : all) {
      const bool is_max = std::any_of(maximal.begin(), maximal.end(), [&](const PermGroup& m) { return same_subgroup(m, n); });
      found.push_back({n, is_max});
    }
  } catch (const OrderCapExceeded&) {
    report.partial = true;
    found = closures_of_strong_generators(aut);
  }
  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.group.order() > b.group.order(); });

  const bool trivial_maximal = std::none_of(found.begin(), found.end(), [](const Found& f) { return f.maximal; });
  report.candidates.push_back(make_candidate(g, aut, PermGroup::trivial(g.order()), trivial_maximal, opts));
  for (const auto& f : found) report.candidates.push_back(make_candidate(g, aut, f.group, f.maximal, opts));

  report.verdict = true;
  for (const auto& c : report.candidates) {
    if (!c.maximal) continue;
    const bool ok = c.cover.is_r_cover && c.cover.r && *c.cover.r > 0 && report.valency % *c.cover.r == 0 &&
                    c.identified.has_value();
    report.verdict = report.verdict && ok;
  }
  return report;
}

ReductionReport reduce(const Graph& g, const ReduceOptions& opts) {
  return reduce(g, automorphism_group(g, SearchOptions{opts.limits.node_budget, opts.limits.element_cap}), opts);
}

bool verify_reduction_theorem(const Graph& g, const ReduceOptions& opts) { return reduce(g, opts).verdict; }

}  // namespace bicirc
