#pragma once

#include <optional>

#include "bicirc/automorphisms.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/perm_group.hpp"
#include "bicirc/permutation.hpp"

namespace bicirc {

/// An automorphism of `g` whose cycle type is exactly `type`, or nullopt if
/// none exists (the search is exhaustive). Cycles are built one at a time,
/// each starting at the smallest vertex not yet placed, while adjacency is
/// checked against every image already assigned.
///
/// Throws std::invalid_argument if the type does not sum to the order and
/// BudgetExceeded if the node budget runs out.
std::optional<Permutation> find_automorphism_with_cycle_type(const Graph& g, const CycleType& type,
                                                             const SearchOptions& opts = {});

/// Uses `aut`, which must be the full automorphism group. Groups of order at
/// most opts.element_cap are scanned element by element. Larger ones are
/// sampled uniformly a few thousand times (fixed seed), then searched as above
/// with the image of vertex 0 restricted to orbit representatives of the
/// stabilizer of 0 (conjugating by that stabilizer preserves the cycle type).
std::optional<Permutation> find_automorphism_with_cycle_type(const Graph& g, const CycleType& type,
                                                             const PermGroup& aut, const SearchOptions& opts = {});

}  // namespace bicirc
