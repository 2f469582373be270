#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bicirc {

/// A partition of {0..n-1}. Canonical: blocks are sorted internally and
/// ordered by their smallest element, block ids follow that order.
class Partition {
 public:
  Partition() = default;
  static Partition from_blocks(std::size_t n, std::vector<std::vector<std::uint32_t>> blocks);
  /// Any labelling vertex -> label; labels are renumbered canonically.
  static Partition from_labels(const std::vector<std::uint32_t>& labels);
  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);

  std::size_t domain_size() const { return block_of_.size(); }
  std::size_t size() const { return blocks_.size(); }
  std::uint32_t block_of(std::uint32_t v) const { return block_of_[v]; }
  const std::vector<std::uint32_t>& block_ids() const { return block_of_; }
  const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
  const std::vector<std::uint32_t>& block(std::size_t i) const { return blocks_[i]; }

  /// True for the one-block and all-singletons partitions.
  bool is_trivial() const;
  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  std::vector<std::size_t> block_sizes() const;
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }

 private:
  std::vector<std::uint32_t> block_of_;
  std::vector<std::vector<std::uint32_t>> blocks_;
};

}  // namespace bicirc
