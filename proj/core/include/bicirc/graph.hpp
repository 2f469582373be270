#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bicirc {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Immutable simple undirected graph with one bit row per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Repeated edges are merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_adjacency(std::size_t n, std::span<const std::uint64_t> rows);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63u)) & 1u;
  }
  std::span<const std::uint64_t> row(std::uint32_t v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t degree(std::uint32_t v) const;
  std::vector<std::uint32_t> neighbors(std::uint32_t v) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  /// Optional vertex annotations (e.g. the pair of a lexicographic product).
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

/// Collects edges, then freezes them into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  GraphBuilder& add_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::size_t order() const { return n_; }
  Graph build() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

}  // namespace bicirc
