#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicirc/automorphisms.hpp"
#include "bicirc/catalog.hpp"
#include "bicirc/error.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/graph_ops.hpp"
#include "bicirc/partition.hpp"
#include "bicirc/perm_group.hpp"

namespace bicirc {

struct ReduceOptions {
  Limits limits;
  /// Confirm the input is a bicirculant before reducing.
  bool require_bicirculant = true;
};

/// One normal subgroup N of Aut(g) with at least three orbits, and the
/// quotient by its orbits.
struct ReductionCandidate {
  std::vector<Permutation> generators;
  BigInt order;
  Partition orbits;
  /// No normal subgroup strictly containing N has three or more orbits.
  bool maximal = false;
  std::optional<bool> cyclic;
  Graph quotient;
  CoverReport cover;
  std::optional<CatalogEntry> identified;
  /// Properties of the action of Aut(g) on the orbits of N (absent when the
  /// element cap was hit).
  std::optional<bool> quasiprimitive, biquasiprimitive;
};

struct ReductionReport {
  Graph input;
  std::size_t valency = 0;
  BigInt aut_order;
  std::vector<Permutation> aut_generators;
  /// Trivial subgroup first, then by decreasing order.
  std::vector<ReductionCandidate> candidates;
  /// The normal subgroup lattice could not be enumerated under the cap;
  /// candidates come from normal closures of strong generators only.
  bool partial = false;
  /// Every maximal candidate yields an r-cover with r dividing the valency
  /// of a graph found in the basic catalog.
  bool verdict = false;
  std::string scope = "with respect to the full automorphism group";

  const ReductionCandidate* find_candidate(const BigInt& order, const std::string& quotient_certificate,
                                           bool require_cyclic) const;
};

/// Throws std::invalid_argument unless g is connected, arc-transitive, has
/// at least three vertices and (optionally) is a bicirculant.
ReductionReport reduce(const Graph& g, const ReduceOptions& opts = {});
ReductionReport reduce(const Graph& g, const PermGroup& aut, const ReduceOptions& opts = {});

/// reduce(g).verdict.
bool verify_reduction_theorem(const Graph& g, const ReduceOptions& opts = {});

}  // namespace bicirc
