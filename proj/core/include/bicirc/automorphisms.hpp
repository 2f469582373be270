#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicirc/error.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/perm_group.hpp"

namespace bicirc {

/// A graph whose automorphisms must also preserve a vertex colouring.
struct ColoredGraph {
  Graph graph;
  /// One colour per vertex; empty means uniform.
  std::vector<std::uint32_t> colors;
};

struct SearchOptions {
  std::uint64_t node_budget = Limits{}.node_budget;
  /// Groups up to this order may be scanned element by element.
  std::uint64_t element_cap = Limits{}.element_cap;
};

struct CanonicalForm {
  /// Vertex v of the input becomes vertex labeling[v] of the canonical graph.
  Permutation labeling;
  /// Equal for two inputs iff they are isomorphic (colours included).
  std::string certificate;
};

/// Full colour-preserving automorphism group. Throws BudgetExceeded.
PermGroup automorphism_group(const ColoredGraph& g, const SearchOptions& opts = {});
PermGroup automorphism_group(const Graph& g, const SearchOptions& opts = {});

CanonicalForm canonical_form(const ColoredGraph& g, const SearchOptions& opts = {});
CanonicalForm canonical_form(const Graph& g, const SearchOptions& opts = {});
/// Same as canonical_form but reuses an already computed automorphism group.
CanonicalForm canonical_form(const ColoredGraph& g, const PermGroup& aut, const SearchOptions& opts = {});

bool are_isomorphic(const Graph& a, const Graph& b, const SearchOptions& opts = {});

bool is_vertex_transitive(const Graph& g, const SearchOptions& opts = {});
bool is_arc_transitive(const Graph& g, const SearchOptions& opts = {});
bool is_edge_transitive(const Graph& g, const SearchOptions& opts = {});

// Variants that take the automorphism group (or any subgroup of it).
bool is_vertex_transitive(const Graph& g, const PermGroup& group);
bool is_arc_transitive(const Graph& g, const PermGroup& group);
bool is_edge_transitive(const Graph& g, const PermGroup& group);

/// Sorted orbit sizes of the stabilizer of v on the vertex set.
std::vector<std::size_t> stabilizer_orbit_profile(const Graph& g, std::uint32_t v, const SearchOptions& opts = {});
std::vector<std::size_t> stabilizer_orbit_profile(const PermGroup& group, std::uint32_t v);

}  // namespace bicirc
