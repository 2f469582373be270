#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bicirc/graph_ops.hpp"

namespace bicirc::oracle {

namespace {

bool maps_edges(const Graph& a, const Graph& b, const std::vector<std::uint32_t>& img) {
  for (const auto& [u, v] : a.edges())
    if (!b.adjacent(img[u], img[v])) return false;
  return true;
}

}  // namespace

std::vector<Permutation> brute_force_automorphisms(const Graph& g) {
  std::vector<std::uint32_t> img(g.order());
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Permutation> out;
  do {
    if (maps_edges(g, g, img)) out.emplace_back(std::span<const std::uint32_t>(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> queue{Permutation(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : gens) {
      auto p = queue[i] * s;
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  return queue;
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> a(n, 0), maxv(n, 0);
  // a[i] <= 1 + max(a[0..i-1])
  while (true) {
    out.push_back(Partition::from_labels(a));
    std::size_t i = n;
    while (i-- > 1) {
      if (a[i] <= maxv[i - 1]) break;
    }
    if (i == 0) break;
    ++a[i];
    maxv[i] = std::max(maxv[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxv[j] = maxv[i];
    }
  }
  return out;
}

bool is_invariant(const Partition& p, const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    for (const auto& block : p.blocks()) {
      const auto target = p.block_of(g[block.front()]);
      for (auto x : block)
        if (p.block_of(g[x]) != target) return false;
    }
  return true;
}

std::vector<Partition> minimal_block_systems(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<Partition> invariant;
  for (auto& p : all_partitions(n))
    if (!p.is_trivial() && is_invariant(p, gens)) invariant.push_back(std::move(p));
  std::vector<Partition> out;
  for (const auto& p : invariant) {
    bool finer_exists = false;
    for (const auto& q : invariant)
      if (!(q == p) && q.refines(p)) finer_exists = true;
    if (!finer_exists) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.block_ids() < b.block_ids(); });
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::uint32_t> img(a.order());
  std::iota(img.begin(), img.end(), 0u);
  do {
    if (maps_edges(a, b, img)) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

std::vector<std::uint32_t> orbit(std::size_t n, const std::vector<Permutation>& gens, std::uint32_t point) {
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> out{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens)
      if (!seen[g[out[i]]]) {
        seen[g[out[i]]] = 1;
        out.push_back(g[out[i]]);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::span<const std::uint32_t>(img));
}

}  // namespace bicirc::oracle
