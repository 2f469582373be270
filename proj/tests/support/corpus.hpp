#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicirc/family_spec.hpp"
#include "bicirc/graph.hpp"

namespace bicirc::corpus {

struct Entry {
  std::string name;
  Graph graph;
};

/// Named graphs on at most 8 vertices: family members, cycles, paths, stars.
std::vector<Entry> small_graphs();

/// `count` seeded random graphs on 1..8 vertices with varied density.
std::vector<Entry> random_graphs(std::size_t count, std::uint64_t seed);

/// Family instances up to a few dozen vertices (no random graphs).
std::vector<FamilySpec> family_instances();

/// small_graphs, random_graphs(200, 1) and family_instances together.
std::vector<Entry> full();

}  // namespace bicirc::corpus
