#include "refinement.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace bicirc::detail {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

AdjacencyLists adjacency_lists(const Graph& g) {
  AdjacencyLists adj(g.order());
  for (std::uint32_t v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

OrderedPartition::OrderedPartition(const std::vector<std::uint32_t>& colors)
    : lab_(colors.size()), pos_(colors.size()), start_(colors.size()), end_(colors.size()) {
  std::iota(lab_.begin(), lab_.end(), 0u);
  std::stable_sort(lab_.begin(), lab_.end(), [&](std::uint32_t a, std::uint32_t b) { return colors[a] < colors[b]; });
  std::uint32_t s = 0;
  for (std::uint32_t i = 0; i < lab_.size(); ++i) {
    pos_[lab_[i]] = i;
    if (i > 0 && colors[lab_[i]] != colors[lab_[i - 1]]) {
      end_[s] = i;
      s = i;
      ++cells_;
    }
    start_[i] = s;
  }
  if (!lab_.empty()) {
    end_[s] = static_cast<std::uint32_t>(lab_.size());
    ++cells_;
  }
}

std::uint32_t OrderedPartition::target_cell() const {
  std::uint32_t best = static_cast<std::uint32_t>(size());
  std::size_t best_size = size() + 1;
  for (std::uint32_t s = 0; s < size(); s = end_[s]) {
    const auto len = end_[s] - s;
    if (len > 1 && len < best_size) {
      best = s;
      best_size = len;
    }
  }
  return best;
}

std::vector<std::uint32_t> OrderedPartition::cell(std::uint32_t start) const {
  return {lab_.begin() + start, lab_.begin() + end_[start]};
}

std::uint64_t OrderedPartition::individualize_and_refine(const AdjacencyLists& adj, std::uint32_t v) {
  const auto s = cell_start_of(v);
  const auto e = end_[s];
  const auto p = pos_[v];
  std::swap(lab_[p], lab_[s]);
  pos_[lab_[p]] = p;
  pos_[v] = s;
  if (e - s > 1) {
    end_[s] = s + 1;
    end_[s + 1] = e;
    for (auto i = s + 1; i < e; ++i) start_[i] = s + 1;
    ++cells_;
  }
  return mix(refine(adj, {s}), s);
}

std::uint64_t OrderedPartition::refine_all(const AdjacencyLists& adj) {
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < size(); s = end_[s]) queue.push_back(s);
  return refine(adj, std::move(queue));
}

std::uint64_t OrderedPartition::refine(const AdjacencyLists& adj, std::vector<std::uint32_t> initial) {
  const auto n = size();
  std::uint64_t trace = mix(0, n);
  std::deque<std::uint32_t> queue(initial.begin(), initial.end());
  std::vector<char> queued(n, 0);
  for (auto s : initial) queued[s] = 1;
  std::vector<std::uint32_t> count(n, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> touched_cells;
  std::vector<std::uint32_t> fragments;

  while (!queue.empty() && cells_ < n) {
    const auto w = queue.front();
    queue.pop_front();
    queued[w] = 0;
    touched.clear();
    for (auto i = w; i < end_[w]; ++i)
      for (auto u : adj[lab_[i]]) {
        if (count[u]++ == 0) touched.push_back(u);
      }
    touched_cells.clear();
    for (auto u : touched) touched_cells.push_back(start_[pos_[u]]);
    std::sort(touched_cells.begin(), touched_cells.end());
    touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
    trace = mix(trace, w);

    for (auto c : touched_cells) {
      const auto e = end_[c];
      if (e - c == 1) {
        trace = mix(trace, count[lab_[c]]);
        continue;
      }
      std::sort(lab_.begin() + c, lab_.begin() + e,
                [&](std::uint32_t a, std::uint32_t b) { return count[a] != count[b] ? count[a] < count[b] : a < b; });
      fragments.clear();
      fragments.push_back(c);
      for (auto i = c + 1; i < e; ++i)
        if (count[lab_[i]] != count[lab_[i - 1]]) fragments.push_back(i);
      trace = mix(trace, c);
      for (auto f : fragments) trace = mix(mix(trace, f), count[lab_[f]]);
      for (auto i = c; i < e; ++i) pos_[lab_[i]] = i;
      if (fragments.size() == 1) continue;

      fragments.push_back(e);
      std::size_t largest = 0;
      for (std::size_t k = 0; k + 1 < fragments.size(); ++k) {
        const auto f = fragments[k], g = fragments[k + 1];
        end_[f] = g;
        for (auto i = f; i < g; ++i) start_[i] = f;
        if (g - f > fragments[largest + 1] - fragments[largest]) largest = k;
      }
      cells_ += fragments.size() - 2;
      const bool was_queued = queued[c] != 0;
      for (std::size_t k = 0; k + 1 < fragments.size(); ++k) {
        const auto f = fragments[k];
        if (queued[f]) continue;
        if (!was_queued && k == largest) continue;
        queued[f] = 1;
        queue.push_back(f);
      }
    }
    for (auto u : touched) count[u] = 0;
  }
  return mix(trace, cells_);
}

}  // namespace bicirc::detail
