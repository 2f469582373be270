#include "bicirc/cycle_search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "bicirc/group_structure.hpp"
#include "bicirc/stabilizer_chain.hpp"

namespace bicirc {

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

class CycleSearch {
 public:
  CycleSearch(const Graph& g, const CycleType& type, std::vector<char> first_image_allowed, std::uint64_t budget)
      : g_(g), n_(static_cast<std::uint32_t>(g.order())), img_(n_, kUnset), used_(n_, 0),
        allowed0_(std::move(first_image_allowed)), budget_(budget) {
    for (auto len : type.lengths()) ++remaining_[len];
    for (std::uint32_t v = 0; v < n_; ++v) degree_.push_back(g.degree(v));
  }

  std::optional<Permutation> run() {
    if (!start_cycle()) return std::nullopt;
    std::vector<std::uint32_t> images(img_.begin(), img_.end());
    return Permutation(images);
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("cycle-type search exceeded its node budget");
  }

  // Assigning u -> x must agree with every assignment made so far.
  bool consistent(std::uint32_t u, std::uint32_t x) const {
    if (degree_[u] != degree_[x]) return false;
    if (g_.adjacent(u, u) != g_.adjacent(x, x)) return false;
    for (auto w : assigned_) {
      if (g_.adjacent(u, w) != g_.adjacent(x, img_[w])) return false;
    }
    return true;
  }

  void assign(std::uint32_t u, std::uint32_t x) {
    img_[u] = x;
    used_[x] = 1;
    assigned_.push_back(u);
  }
  void unassign(std::uint32_t u) {
    used_[img_[u]] = 0;
    img_[u] = kUnset;
    assigned_.pop_back();
  }

  bool start_cycle() {
    tick();
    // Only whole cycles are placed here, so the first unmapped vertex starts the next one.
    std::uint32_t head = 0;
    while (head < n_ && img_[head] != kUnset) ++head;
    if (head == n_) return true;
    // Any length can hold the smallest unplaced vertex; try each distinct one, longest first.
    for (auto it = remaining_.rbegin(); it != remaining_.rend(); ++it) {
      if (it->second == 0) continue;
      const auto len = it->first;
      --it->second;
      cycle_.assign(1, head);
      if (extend(len)) return true;
      ++it->second;
    }
    return false;
  }

  // cycle_ holds c_0..c_k with c_i -> c_{i+1} assigned for i < k.
  bool extend(std::size_t len) {
    tick();
    const auto last = cycle_.back();
    if (cycle_.size() == len) {
      if (!consistent(last, cycle_.front())) return false;
      assign(last, cycle_.front());
      auto closed = cycle_;
      if (start_cycle()) return true;
      cycle_ = std::move(closed);
      unassign(last);
      return false;
    }
    const bool first_move = assigned_.empty() && last == 0;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (used_[x] || img_[x] != kUnset || x == cycle_.front()) continue;
      if (std::find(cycle_.begin(), cycle_.end(), x) != cycle_.end()) continue;
      if (first_move && !allowed0_.empty() && !allowed0_[x]) continue;
      if (!consistent(last, x)) continue;
      assign(last, x);
      cycle_.push_back(x);
      if (extend(len)) return true;
      cycle_.pop_back();
      unassign(last);
    }
    return false;
  }

  const Graph& g_;
  std::uint32_t n_;
  std::vector<std::uint32_t> img_;
  std::vector<char> used_;
  std::vector<char> allowed0_;
  std::vector<std::uint32_t> assigned_;
  std::vector<std::size_t> degree_;
  std::map<std::size_t, std::size_t> remaining_;
  std::vector<std::uint32_t> cycle_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// Uniform random group element: one coset representative per level.
Permutation random_element(const StabilizerChain& chain, std::mt19937_64& rng) {
  Permutation acc(chain.degree());
  for (std::size_t l = chain.depth(); l-- > 0;) {
    const auto& orbit = chain.basic_orbit(l);
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    acc = acc * chain.transversal(l, orbit[pick(rng)]);
  }
  return acc;
}

constexpr int kSamples = 4096;

void check_type(const Graph& g, const CycleType& type) {
  if (type.degree() != g.order()) throw std::invalid_argument("cycle type does not sum to the number of vertices");
  for (auto len : type.lengths())
    if (len == 0) throw std::invalid_argument("cycle lengths must be positive");
}

}  // namespace

std::optional<Permutation> find_automorphism_with_cycle_type(const Graph& g, const CycleType& type,
                                                             const SearchOptions& opts) {
  check_type(g, type);
  if (g.order() == 0) return Permutation(0);
  return CycleSearch(g, type, {}, opts.node_budget).run();
}

std::optional<Permutation> find_automorphism_with_cycle_type(const Graph& g, const CycleType& type,
                                                             const PermGroup& aut, const SearchOptions& opts) {
  check_type(g, type);
  if (g.order() == 0) return Permutation(0);
  if (aut.degree() != g.order()) throw std::invalid_argument("group degree does not match graph order");
  if (aut.order() <= opts.element_cap) {
    // Small enough to scan the whole group.
    std::optional<Permutation> found;
    aut.chain().for_each_element([&](const Permutation& p) {
      if (p.cycle_type() == type) found = p;
      return !found;
    });
    return found;
  }
  // Large groups usually contain the wanted type often; sample before the exhaustive search.
  std::mt19937_64 rng(0x5eedULL);
  for (int i = 0; i < kSamples; ++i) {
    auto p = random_element(aut.chain(), rng);
    if (p.cycle_type() == type) return p;
  }
  std::vector<char> allowed(g.order(), 0);
  const auto suborbits = point_stabilizer(aut, 0).orbits();
  for (const auto& block : suborbits.blocks()) allowed[block.front()] = 1;
  return CycleSearch(g, type, std::move(allowed), opts.node_budget).run();
}

}  // namespace bicirc
