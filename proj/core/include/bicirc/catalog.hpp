#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bicirc/automorphisms.hpp"
#include "bicirc/family_spec.hpp"
#include "bicirc/graph.hpp"

namespace bicirc {

/// One basic graph of the reduction theorem; `clause` is 'a'..'g'.
struct CatalogEntry {
  char clause = '?';
  FamilySpec spec;
};

/// Every basic graph with the given order and valency, in clause order.
/// Requires order <= 10^4.
std::vector<CatalogEntry> basic_catalog(std::size_t order, std::size_t valency);

/// First catalog entry isomorphic to g, if any. Non-regular graphs never match.
std::optional<CatalogEntry> identify_basic(const Graph& g, const SearchOptions& opts = {});

}  // namespace bicirc
