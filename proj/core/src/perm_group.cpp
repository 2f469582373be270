#include "bicirc/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace bicirc {

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  if (degree > kMaxDegree) throw std::invalid_argument("group degree above 2^16");
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
    std::vector<std::uint32_t> cycle(degree);
    for (std::uint32_t i = 0; i < degree; ++i) cycle[i] = i;
    if (degree > 2) gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(const Permutation& generator) {
  return PermGroup(generator.degree(), {generator});
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once,
                 [&] { cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_); });
  return *cache_->chain;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  if (g.is_identity()) return true;
  return chain().contains(g);
}

bool PermGroup::contains_group(const PermGroup& sub) const {
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  std::vector<std::uint32_t> out{point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : generators_) {
      const auto y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Partition PermGroup::orbits() const { return orbits_of(degree_, generators_); }

Partition orbits_of(std::size_t degree, std::span<const Permutation> generators) {
  std::vector<std::uint32_t> label(degree, UINT32_MAX);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < degree; ++start) {
    if (label[start] != UINT32_MAX) continue;
    label[start] = start;
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : generators) {
        const auto y = g[queue[i]];
        if (label[y] == UINT32_MAX) {
          label[y] = start;
          queue.push_back(y);
        }
      }
  }
  return Partition::from_labels(label);
}

}  // namespace bicirc
