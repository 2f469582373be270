#include "bicirc/graph.hpp"

#include <stdexcept>

namespace bicirc {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_adjacency(std::size_t n, std::span<const std::uint64_t> rows) {
  Graph g(n);
  if (rows.size() != g.bits_.size()) throw std::invalid_argument("adjacency size mismatch");
  g.bits_.assign(rows.begin(), rows.end());
  for (std::uint32_t u = 0; u < n; ++u) {
    if (g.adjacent(u, u)) throw std::invalid_argument("loop in adjacency");
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw std::invalid_argument("adjacency not symmetric");
  }
  return g;
}

std::size_t Graph::degree(std::uint32_t v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<std::uint32_t> Graph::neighbors(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint32_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < n_; ++u)
    for (auto v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) throw std::invalid_argument("label count mismatch");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

GraphBuilder& GraphBuilder::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63u);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63u);
  return *this;
}

bool GraphBuilder::has_edge(std::uint32_t u, std::uint32_t v) const {
  return (bits_[u * words_ + (v >> 6)] >> (v & 63u)) & 1u;
}

Graph GraphBuilder::build() const { return Graph::from_adjacency(n_, bits_); }

}  // namespace bicirc
