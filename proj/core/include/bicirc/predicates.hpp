#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicirc/automorphisms.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/perm_group.hpp"
#include "bicirc/permutation.hpp"

namespace bicirc {

struct CirculantResult {
  /// An automorphism that is a single n-cycle, if one exists.
  std::optional<Permutation> witness;
  bool connected = false;
};

/// Exhaustive search for an n-cycle automorphism, pruned by Aut(g) which is
/// computed first. Throws BudgetExceeded.
CirculantResult is_circulant(const Graph& g, const SearchOptions& opts = {});
/// As above with Aut(g) already known (see find_automorphism_with_cycle_type).
CirculantResult is_circulant(const Graph& g, const PermGroup& aut, const SearchOptions& opts = {});

struct BicirculantWitness {
  /// Two cycles of length n = |V|/2.
  Permutation perm;
  std::vector<std::uint32_t> h0, h1;
};

/// Throws std::invalid_argument for graphs of odd order and BudgetExceeded
/// when the search runs out of nodes.
std::optional<BicirculantWitness> is_bicirculant(const Graph& g, const SearchOptions& opts = {});
std::optional<BicirculantWitness> is_bicirculant(const Graph& g, const PermGroup& aut, const SearchOptions& opts = {});

/// Shape of a connected arc-transitive circulant relative to a regular cycle.
struct KovacsLiShape {
  enum class Kind { normal, lex_product, lex_minus, none };
  Kind kind = Kind::none;
  /// Sigma has order m and each block has b vertices (zero for normal/none).
  std::size_t m = 0, b = 0;
  std::string to_string() const;
};

/// `cycle` must be an automorphism that is a single |V|-cycle.
KovacsLiShape kovacs_li_shape(const Graph& g, const Permutation& cycle, const SearchOptions& opts = {});
KovacsLiShape kovacs_li_shape(const Graph& g, const Permutation& cycle, const PermGroup& aut);

}  // namespace bicirc
