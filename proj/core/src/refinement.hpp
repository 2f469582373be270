#pragma once

#include <cstdint>
#include <vector>

#include "bicirc/graph.hpp"

namespace bicirc::detail {

using AdjacencyLists = std::vector<std::vector<std::uint32_t>>;

AdjacencyLists adjacency_lists(const Graph& g);

/// Ordered partition of the vertex set into contiguous cells of `lab`.
class OrderedPartition {
 public:
  /// Cells are the colour classes, ordered by colour value.
  explicit OrderedPartition(const std::vector<std::uint32_t>& colors);

  std::size_t size() const { return lab_.size(); }
  std::size_t cell_count() const { return cells_; }
  bool discrete() const { return cells_ == lab_.size(); }
  const std::vector<std::uint32_t>& lab() const { return lab_; }
  std::uint32_t cell_start_of(std::uint32_t v) const { return start_[pos_[v]]; }
  std::uint32_t cell_end(std::uint32_t start) const { return end_[start]; }

  /// Start of the first smallest non-singleton cell; size() if discrete.
  std::uint32_t target_cell() const;
  std::vector<std::uint32_t> cell(std::uint32_t start) const;

  /// Splits v off the front of its cell and refines to an equitable
  /// partition. Returns a trace hash that is invariant under relabelling.
  std::uint64_t individualize_and_refine(const AdjacencyLists& adj, std::uint32_t v);
  /// Refines the initial colouring; every cell is a splitter.
  std::uint64_t refine_all(const AdjacencyLists& adj);

 private:
  std::uint64_t refine(const AdjacencyLists& adj, std::vector<std::uint32_t> queue);

  std::vector<std::uint32_t> lab_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> start_;  // position -> start of its cell
  std::vector<std::uint32_t> end_;    // cell start -> one past its last position
  std::size_t cells_ = 0;
};

}  // namespace bicirc::detail
