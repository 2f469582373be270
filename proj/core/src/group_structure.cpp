#include "bicirc/group_structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bicirc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void check_cap(const PermGroup& g, std::uint64_t cap) {
  const BigInt order = g.order();
  if (order > cap) {
    std::ostringstream msg;
    msg << "group order " << order << " exceeds element cap " << cap;
    throw OrderCapExceeded(msg.str());
  }
}

void require_transitive(const PermGroup& g) {
  if (g.degree() == 0 || g.orbit_count() != 1) throw std::invalid_argument("group is not transitive");
}

std::vector<PermGroup> class_closures(const PermGroup& g, std::uint64_t cap) {
  std::vector<PermGroup> out;
  const auto classes = conjugacy_classes(g, cap);
  for (std::size_t c = 1; c < classes.size(); ++c) {
    const Permutation& rep = classes[c].front();
    out.push_back(normal_closure(g, std::span<const Permutation>(&rep, 1)));
  }
  return out;
}

// Subgroups bucketed by (order, orbits); equality inside a bucket is exact.
class SubgroupSet {
 public:
  // Returns false if an equal subgroup is already present.
  bool insert(const PermGroup& h) {
    auto& bucket = buckets_[key(h)];
    for (const auto& other : bucket)
      if (same_subgroup(other, h)) return false;
    bucket.push_back(h);
    return true;
  }

 private:
  static std::pair<std::string, std::vector<std::uint32_t>> key(const PermGroup& h) {
    return {h.order().str(), h.orbits().block_ids()};
  }
  std::map<std::pair<std::string, std::vector<std::uint32_t>>, std::vector<PermGroup>> buckets_;
};

struct NormalSearchResult {
  PermGroup group;
  bool maximal;
};

std::vector<NormalSearchResult> search_normal_subgroups(const PermGroup& g, std::size_t min_orbits,
                                                        std::uint64_t cap) {
  std::vector<PermGroup> atoms;
  {
    SubgroupSet seen;
    for (auto& closure : class_closures(g, cap))
      if (closure.orbit_count() >= min_orbits && seen.insert(closure)) atoms.push_back(std::move(closure));
  }
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() > b.order(); });

  std::vector<NormalSearchResult> found;
  SubgroupSet visited;
  std::function<void(const PermGroup&)> dfs = [&](const PermGroup& current) {
    bool maximal = true;
    for (const auto& atom : atoms) {
      if (current.contains_group(atom)) continue;
      PermGroup joined = join(current, atom);
      if (joined.orbit_count() < min_orbits) continue;
      maximal = false;
      if (visited.insert(joined)) dfs(joined);
    }
    if (!current.is_trivial()) found.push_back({current, maximal});
  };
  if (g.degree() >= min_orbits) dfs(PermGroup::trivial(g.degree()));
  return found;
}

}  // namespace

Partition orbits(const PermGroup& g) { return g.orbits(); }

TransitivityProfile transitivity_profile(const PermGroup& g) {
  TransitivityProfile p;
  const Partition orb = g.orbits();
  p.transitive = g.degree() > 0 && orb.size() == 1;
  // |G_a| = |G| / |a^G|, so semiregularity means every orbit has length |G|.
  const BigInt order = g.order();
  p.semiregular = std::all_of(orb.blocks().begin(), orb.blocks().end(),
                              [&](const auto& b) { return BigInt(b.size()) == order; });
  p.regular = p.transitive && p.semiregular;
  return p;
}

PermGroup point_stabilizer(const PermGroup& g, std::uint32_t point) {
  const std::uint32_t pts[] = {point};
  return pointwise_stabilizer(g, pts);
}

PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const std::uint32_t> points) {
  for (auto p : points)
    if (p >= g.degree()) throw std::invalid_argument("point out of range");
  StabilizerChain chain(g.degree(), g.generators(), points);
  const auto gens = chain.level_generators(points.size());
  return PermGroup(g.degree(), std::vector<Permutation>(gens.begin(), gens.end()));
}

Partition smallest_block_system(const PermGroup& g, std::uint32_t alpha, std::uint32_t beta) {
  UnionFind uf(g.degree());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
  if (uf.unite(alpha, beta)) queue.emplace_back(alpha, beta);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [a, b] = queue[i];
    for (const auto& s : g.generators()) {
      const auto x = uf.find(s[a]);
      const auto y = uf.find(s[b]);
      if (uf.unite(x, y)) queue.emplace_back(x, y);
    }
  }
  std::vector<std::uint32_t> labels(g.degree());
  for (std::uint32_t v = 0; v < g.degree(); ++v) labels[v] = uf.find(v);
  return Partition::from_labels(labels);
}

std::vector<Partition> minimal_block_systems(const PermGroup& g) {
  require_transitive(g);
  std::vector<Partition> candidates;
  for (std::uint32_t beta = 1; beta < g.degree(); ++beta) {
    Partition p = smallest_block_system(g, 0, beta);
    if (p.size() == 1) continue;
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
      candidates.push_back(std::move(p));
  }
  std::vector<Partition> minimal;
  for (const auto& p : candidates) {
    const bool has_finer = std::any_of(candidates.begin(), candidates.end(), [&](const Partition& q) {
      return !(q == p) && q.refines(p);
    });
    if (!has_finer) minimal.push_back(p);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Partition& a, const Partition& b) { return a.block_ids() < b.block_ids(); });
  return minimal;
}

std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap) {
  check_cap(g, cap);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  g.chain().for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g, std::uint64_t cap) {
  auto elements = enumerate_elements(g, cap);
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  index.reserve(elements.size() * 2);
  for (std::uint32_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  std::vector<bool> assigned(elements.size(), false);
  std::vector<std::vector<Permutation>> classes;
  const Permutation identity(g.degree());
  classes.push_back({identity});
  assigned[index.at(identity)] = true;

  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    if (assigned[i]) continue;
    assigned[i] = true;
    queue.assign(1, i);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& s : g.generators()) {
        const auto j = index.at(elements[queue[q]].conjugate_by(s));
        if (!assigned[j]) {
          assigned[j] = true;
          queue.push_back(j);
        }
      }
    std::vector<Permutation> cls;
    cls.reserve(queue.size());
    for (auto j : queue) cls.push_back(elements[j]);
    classes.push_back(std::move(cls));
  }
  return classes;
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (s.degree() != g.degree()) throw std::invalid_argument("seed degree mismatch");
    if (!s.is_identity()) gens.push_back(s);
  }
  if (gens.empty()) return PermGroup::trivial(g.degree());
  StabilizerChain chain(g.degree(), gens);
  std::vector<Permutation> queue = gens;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : g.generators()) {
      Permutation c = queue[i].conjugate_by(s);
      if (chain.contains(c)) continue;
      chain.add_generator(c);
      gens.push_back(c);
      queue.push_back(std::move(c));
    }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in join");
  if (a.contains_group(b)) return a;
  if (b.contains_group(a)) return b;
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains_group(b);
}

std::vector<PermGroup> normal_subgroups_with_min_orbits(const PermGroup& g, std::size_t min_orbits,
                                                        std::uint64_t cap) {
  std::vector<PermGroup> out;
  for (auto& r : search_normal_subgroups(g, min_orbits, cap)) out.push_back(std::move(r.group));
  return out;
}

std::vector<PermGroup> normal_subgroups_with_orbit_bound(const PermGroup& g, std::size_t min_orbits,
                                                         std::uint64_t cap) {
  std::vector<PermGroup> out;
  for (auto& r : search_normal_subgroups(g, min_orbits, cap))
    if (r.maximal) out.push_back(std::move(r.group));
  return out;
}

bool is_quasiprimitive(const PermGroup& g, std::uint64_t cap) {
  require_transitive(g);
  for (const auto& n : class_closures(g, cap))
    if (n.orbit_count() != 1) return false;
  return true;
}

bool is_biquasiprimitive(const PermGroup& g, std::uint64_t cap) {
  require_transitive(g);
  bool some_two = false;
  for (const auto& n : class_closures(g, cap)) {
    const auto k = n.orbit_count();
    if (k > 2) return false;
    some_two = some_two || k == 2;
  }
  return some_two;
}

bool is_cyclic(const PermGroup& g, std::uint64_t cap) {
  const BigInt order = g.order();
  if (order == 1) return true;
  check_cap(g, cap);
  bool found = false;
  g.chain().for_each_element([&](const Permutation& p) {
    found = p.order() == order;
    return !found;
  });
  return found;
}

PermGroup induced_action(const PermGroup& g, const Partition& blocks) {
  if (blocks.domain_size() != g.degree()) throw std::invalid_argument("partition domain mismatch");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<std::uint32_t> img(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& block = blocks.block(b);
      const auto target = blocks.block_of(s[block.front()]);
      for (auto v : block)
        if (blocks.block_of(s[v]) != target) throw std::invalid_argument("partition is not invariant");
      img[b] = target;
    }
    gens.emplace_back(std::span<const std::uint32_t>(img));
  }
  return PermGroup(blocks.size(), std::move(gens));
}

}  // namespace bicirc
