#include "bicirc/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bicirc {

Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<std::uint32_t>> blocks) {
  std::vector<std::uint32_t> labels(n, UINT32_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (auto v : blocks[b]) {
      if (v >= n || labels[v] != UINT32_MAX) throw std::invalid_argument("blocks overlap or out of range");
      labels[v] = static_cast<std::uint32_t>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), UINT32_MAX) != labels.end())
    throw std::invalid_argument("blocks do not cover the domain");
  return from_labels(labels);
}

Partition Partition::from_labels(const std::vector<std::uint32_t>& labels) {
  Partition p;
  p.block_of_.assign(labels.size(), 0);
  std::vector<std::uint32_t> sorted_labels(labels);
  std::sort(sorted_labels.begin(), sorted_labels.end());
  sorted_labels.erase(std::unique(sorted_labels.begin(), sorted_labels.end()), sorted_labels.end());
  std::vector<std::uint32_t> id_of(sorted_labels.size(), UINT32_MAX);
  auto index_of = [&](std::uint32_t label) {
    return static_cast<std::size_t>(
        std::lower_bound(sorted_labels.begin(), sorted_labels.end(), label) - sorted_labels.begin());
  };
  // Scanning points in increasing order assigns ids by smallest element.
  for (std::uint32_t v = 0; v < labels.size(); ++v) {
    auto& id = id_of[index_of(labels[v])];
    if (id == UINT32_MAX) {
      id = static_cast<std::uint32_t>(p.blocks_.size());
      p.blocks_.emplace_back();
    }
    p.block_of_[v] = id;
    p.blocks_[id].push_back(v);
  }
  return p;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = i;
  return from_labels(labels);
}

Partition Partition::whole(std::size_t n) { return from_labels(std::vector<std::uint32_t>(n, 0)); }

bool Partition::is_trivial() const { return blocks_.size() <= 1 || blocks_.size() == block_of_.size(); }

bool Partition::refines(const Partition& coarser) const {
  if (coarser.domain_size() != domain_size()) return false;
  for (const auto& b : blocks_)
    for (auto v : b)
      if (coarser.block_of(v) != coarser.block_of(b.front())) return false;
  return true;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks_) sizes.push_back(b.size());
  return sizes;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out << ',';
    out << '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out << ',';
      out << blocks_[b][i];
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

}  // namespace bicirc
