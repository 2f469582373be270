#include "bicirc/graph_ops.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace bicirc {

Graph complement(const Graph& g) {
  const auto n = g.order();
  GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph lexicographic_product(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order(), n2 = g2.order();
  GraphBuilder b(n1 * n2);
  std::vector<std::string> labels;
  labels.reserve(n1 * n2);
  for (std::uint32_t u1 = 0; u1 < n1; ++u1)
    for (std::uint32_t u2 = 0; u2 < n2; ++u2) {
      labels.push_back("(" + std::to_string(u1) + "," + std::to_string(u2) + ")");
      for (std::uint32_t v1 = 0; v1 < n1; ++v1)
        for (std::uint32_t v2 = 0; v2 < n2; ++v2) {
          const bool adj = g1.adjacent(u1, v1) || (u1 == v1 && g2.adjacent(u2, v2));
          const auto a = static_cast<std::uint32_t>(u1 * n2 + u2);
          const auto c = static_cast<std::uint32_t>(v1 * n2 + v2);
          if (adj && a < c) b.add_edge(a, c);
        }
    }
  return b.build().with_labels(std::move(labels));
}

Graph standard_double_cover(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  GraphBuilder b(2 * n);
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(u, n + v);
    b.add_edge(v, n + u);
  }
  return b.build();
}

Graph bipartite_complement(const Graph& g, const std::vector<bool>& left) {
  const auto n = g.order();
  if (left.size() != n) throw std::invalid_argument("bipartition size mismatch");
  GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (left[u] != left[v] && !g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph edge_difference(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("order mismatch");
  GraphBuilder b(g.order());
  for (const auto& [u, v] : g.edges())
    if (!h.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) throw std::invalid_argument("relabelling degree mismatch");
  GraphBuilder b(g.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(p[u], p[v]);
  return b.build();
}

Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices) {
  GraphBuilder b(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i)
    for (std::uint32_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return b.build();
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    if (g.degree(u) != g.degree(p[u])) return false;
    for (auto v : g.neighbors(u))
      if (!g.adjacent(p[u], p[v])) return false;
  }
  return true;
}

QuotientResult quotient_graph(const Graph& g, const Partition& blocks) {
  const auto n = g.order();
  if (blocks.domain_size() != n) throw std::invalid_argument("partition does not cover the vertex set");
  const auto m = blocks.size();
  const auto words = g.words_per_row();
  std::vector<std::uint64_t> masks(m * words, 0);
  for (std::uint32_t v = 0; v < n; ++v) masks[blocks.block_of(v) * words + (v >> 6)] |= std::uint64_t{1} << (v & 63u);

  // counts[v * m + j] = |N(v) ∩ B_j|
  std::vector<std::size_t> counts(n * m, 0);
  GraphBuilder qb(m);
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto bv = blocks.block_of(v);
    for (std::uint32_t j = 0; j < m; ++j) {
      const auto c = popcount_and(g.row(v), std::span<const std::uint64_t>(masks.data() + j * words, words));
      counts[v * m + j] = c;
      if (c > 0 && j != bv) qb.add_edge(bv, j);
    }
  }
  QuotientResult result{qb.build(), {}};
  CoverReport& cover = result.cover;
  cover.is_r_cover = true;
  bool have_ref = false;
  std::size_t ref_v = 0, ref_j = 0, ref_c = 0;
  for (std::uint32_t v = 0; v < n && cover.is_r_cover; ++v) {
    const auto bv = blocks.block_of(v);
    for (std::uint32_t j = 0; j < m; ++j) {
      if (j == bv || !result.quotient.adjacent(bv, j)) continue;
      const auto c = counts[v * m + j];
      if (!have_ref) {
        have_ref = true;
        ref_v = v;
        ref_j = j;
        ref_c = c;
      } else if (c != ref_c) {
        cover.is_r_cover = false;
        cover.witness = {ref_v, ref_j, ref_c, v, j, c};
        break;
      }
    }
  }
  if (cover.is_r_cover) cover.r = have_ref ? ref_c : std::size_t{1};
  return result;
}

std::optional<std::vector<bool>> bipartition(const Graph& g) {
  const auto n = g.order();
  std::vector<int> side(n, -1);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 1;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto u = queue[i];
      for (auto w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<bool> left(n);
  for (std::size_t v = 0; v < n; ++v) left[v] = side[v] == 1;
  return left;
}

bool is_connected(const Graph& g) {
  const auto n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto w : g.neighbors(queue[i]))
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  return queue.size() == n;
}

BasicProps basic_props(const Graph& g) {
  BasicProps props;
  const auto n = g.order();
  props.connected = is_connected(g);
  if (auto bp = bipartition(g)) {
    props.bipartite = true;
    props.bipartition = std::move(*bp);
  }
  props.regular = true;
  for (std::uint32_t v = 1; v < n; ++v)
    if (g.degree(v) != g.degree(0)) props.regular = false;
  if (props.regular && n > 0) props.valency = g.degree(0);

  // Shortest cycle through each root via BFS, searching only to the cap depth.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  bool longer_cycle_seen = false;
  std::vector<std::size_t> dist(n);
  std::vector<std::uint32_t> parent(n);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[root] = 0;
    parent[root] = root;
    queue.assign(1, root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto u = queue[i];
      if (2 * dist[u] + 1 >= best) break;
      for (auto w : g.neighbors(u)) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const auto len = dist[u] + dist[w] + 1;
          if (len <= BasicProps::kGirthCap) best = std::min(best, len);
          else longer_cycle_seen = true;
        }
      }
    }
  }
  if (best != kInf) {
    props.girth = best;
  } else if (longer_cycle_seen || (props.connected && g.edge_count() >= n && n > 0)) {
    props.girth_exceeds_cap = true;
  }
  return props;
}

}  // namespace bicirc
