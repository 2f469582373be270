#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicirc/automorphisms.hpp"
#include "bicirc/family_spec.hpp"
#include "bicirc/graph.hpp"

namespace bicirc {

struct CensusOptions {
  std::size_t min_valency = 2;
  /// Worker threads; frames are independent.
  std::size_t jobs = 1;
  SearchOptions search;
};

struct CensusEntry {
  /// First frame (in enumeration order) producing this graph.
  fam::BC frame;
  Graph graph;
  std::string certificate;
  BigInt aut_order;
  std::size_t valency = 0;
};

/// Every connected arc-transitive bicirculant BC_n[L,M,R] with n <= max_n
/// and valency in [min_valency, max_valency], up to isomorphism. Frames are
/// enumerated with 0 in M, one representative per orbit of the frame
/// symmetries (unit multiples, translation of M, swapping the halves).
/// Sorted by order, then valency, then certificate.
std::vector<CensusEntry> census(std::size_t max_n, std::size_t max_valency, const CensusOptions& opts = {});

/// The frames that census examines for a given n and valency.
std::vector<fam::BC> census_frames(std::uint32_t n, std::size_t valency);

}  // namespace bicirc
