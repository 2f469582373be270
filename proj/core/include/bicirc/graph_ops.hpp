#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicirc/graph.hpp"
#include "bicirc/partition.hpp"
#include "bicirc/permutation.hpp"

namespace bicirc {

Graph complement(const Graph& g);

/// Vertex (u1, u2) has index u1 * |V(g2)| + u2; labels record the pair.
Graph lexicographic_product(const Graph& g1, const Graph& g2);

/// Vertex (x, 1) is x and (x, 2) is n + x; (x,1) ~ (y,2) iff x ~ y.
Graph standard_double_cover(const Graph& g);

/// Edges of g between the two halves that are absent from g, and vice versa.
/// `left` marks one side of a bipartition; edges inside a side are dropped.
Graph bipartite_complement(const Graph& g, const std::vector<bool>& left);

/// Removes every edge of `h` from `g` (same vertex set).
Graph edge_difference(const Graph& g, const Graph& h);

/// Graph with vertex p(v) in place of v.
Graph relabel(const Graph& g, const Permutation& p);
Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Outcome of testing whether g is an r-cover of a quotient.
struct CoverReport {
  bool is_r_cover = false;
  std::optional<std::size_t> r;
  /// Empty for covers; otherwise {v1, block1, count1, v2, block2, count2}:
  /// two incident (vertex, adjacent block) pairs with different neighbour counts.
  std::vector<std::size_t> witness;
};

struct QuotientResult {
  Graph quotient;
  CoverReport cover;
};

/// Quotient vertices follow the canonical block order of the partition
/// (blocks sorted by smallest vertex).
QuotientResult quotient_graph(const Graph& g, const Partition& blocks);

struct BasicProps {
  bool connected = false;
  bool bipartite = false;
  /// Present when bipartite: one side marked true (the side containing vertex 0
  /// of each component).
  std::vector<bool> bipartition;
  bool regular = false;
  std::optional<std::size_t> valency;
  /// Shortest cycle length if at most kGirthCap; nullopt for acyclic graphs or larger girth.
  std::optional<std::size_t> girth;
  bool girth_exceeds_cap = false;

  static constexpr std::size_t kGirthCap = 16;
};

BasicProps basic_props(const Graph& g);
bool is_connected(const Graph& g);
/// Side assignment if bipartite.
std::optional<std::vector<bool>> bipartition(const Graph& g);

}  // namespace bicirc
