#include "bicirc/predicates.hpp"

#include <numeric>
#include <stdexcept>

#include "bicirc/automorphisms.hpp"
#include "bicirc/cycle_search.hpp"
#include "bicirc/graph_ops.hpp"
#include "bicirc/partition.hpp"

namespace bicirc {

namespace {

CycleType circulant_type(const Graph& g) { return CycleType({g.order()}); }

CycleType bicirculant_type(const Graph& g) {
  if (g.order() % 2 != 0) throw std::invalid_argument("a bicirculant has an even number of vertices");
  return CycleType({g.order() / 2, g.order() / 2});
}

std::optional<BicirculantWitness> to_witness(std::optional<Permutation> p) {
  if (!p) return std::nullopt;
  auto cycles = p->cycles(true);
  return BicirculantWitness{std::move(*p), std::move(cycles[0]), std::move(cycles[1])};
}

// Blocks are the orbits of cycle^m (each of size b).
Partition power_orbits(const Permutation& cycle, std::size_t m) {
  return Partition::from_blocks(cycle.degree(), cycle.pow(static_cast<long long>(m)).cycles(true));
}

bool no_edges_inside(const Graph& g, const Partition& blocks) {
  for (const auto& block : blocks.blocks())
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (g.adjacent(block[i], block[j])) return false;
  return true;
}

// Every pair of blocks is either fully joined or not joined at all.
bool is_lex_product(const Graph& g, const Partition& blocks) {
  if (!no_edges_inside(g, blocks)) return false;
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      std::size_t count = 0;
      for (auto u : blocks.block(x))
        for (auto v : blocks.block(y)) count += g.adjacent(u, v);
      const auto full = blocks.block(x).size() * blocks.block(y).size();
      if (count != 0 && count != full) return false;
    }
  return true;
}

// Adjacent blocks induce K_{b,b} minus a perfect matching, and the missing
// edges form b components that each meet every block once.
bool is_lex_minus(const Graph& g, const Partition& blocks, std::size_t b) {
  if (!no_edges_inside(g, blocks)) return false;
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      std::size_t count = 0;
      for (auto u : blocks.block(x))
        for (auto v : blocks.block(y)) count += g.adjacent(u, v);
      if (count == 0) continue;
      if (count != b * b - b) return false;
      for (auto u : blocks.block(x)) {
        std::size_t missing = 0;
        for (auto v : blocks.block(y))
          if (!g.adjacent(u, v)) {
            ++missing;
            parent[find(u)] = find(v);
          }
        if (missing != 1) return false;
      }
    }
  std::vector<std::vector<std::size_t>> hits(n);
  std::size_t components = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto root = find(v);
    if (hits[root].empty()) {
      ++components;
      hits[root].assign(blocks.size(), 0);
    }
    ++hits[root][blocks.block_of(v)];
  }
  if (components != b) return false;
  for (std::uint32_t v = 0; v < n; ++v)
    if (!hits[v].empty())
      for (auto h : hits[v])
        if (h != 1) return false;
  return true;
}

}  // namespace

CirculantResult is_circulant(const Graph& g, const SearchOptions& opts) {
  return is_circulant(g, automorphism_group(g, opts), opts);
}

CirculantResult is_circulant(const Graph& g, const PermGroup& aut, const SearchOptions& opts) {
  return {find_automorphism_with_cycle_type(g, circulant_type(g), aut, opts), is_connected(g)};
}

std::optional<BicirculantWitness> is_bicirculant(const Graph& g, const SearchOptions& opts) {
  bicirculant_type(g);  // odd order is rejected before any search
  return is_bicirculant(g, automorphism_group(g, opts), opts);
}

std::optional<BicirculantWitness> is_bicirculant(const Graph& g, const PermGroup& aut, const SearchOptions& opts) {
  return to_witness(find_automorphism_with_cycle_type(g, bicirculant_type(g), aut, opts));
}

std::string KovacsLiShape::to_string() const {
  switch (kind) {
    case Kind::normal:
      return "normal";
    case Kind::lex_product:
      return "lex_product(" + std::to_string(m) + "," + std::to_string(b) + ")";
    case Kind::lex_minus:
      return "lex_minus(" + std::to_string(m) + "," + std::to_string(b) + ")";
    case Kind::none:
      break;
  }
  return "none";
}

KovacsLiShape kovacs_li_shape(const Graph& g, const Permutation& cycle, const PermGroup& aut) {
  const auto n = g.order();
  if (cycle.degree() != n || cycle.cycle_type() != CycleType({n}) || !is_automorphism(g, cycle))
    throw std::invalid_argument("kovacs_li_shape needs an n-cycle automorphism");
  const auto cyclic = PermGroup::cyclic(cycle);
  bool normal = true;
  for (const auto& s : aut.generators())
    if (!cyclic.contains(cycle.conjugate_by(s))) {
      normal = false;
      break;
    }
  if (normal) return {KovacsLiShape::Kind::normal, 0, 0};
  if (n < 4) return {};
  for (std::size_t b = n - 1; b >= 2; --b) {
    if (n % b != 0) continue;
    const auto m = n / b;
    const auto blocks = power_orbits(cycle, m);
    if (is_lex_product(g, blocks)) return {KovacsLiShape::Kind::lex_product, m, b};
    if (std::gcd(m, b) == 1 && is_lex_minus(g, blocks, b)) return {KovacsLiShape::Kind::lex_minus, m, b};
  }
  return {};
}

KovacsLiShape kovacs_li_shape(const Graph& g, const Permutation& cycle, const SearchOptions& opts) {
  return kovacs_li_shape(g, cycle, automorphism_group(g, opts));
}

}  // namespace bicirc
