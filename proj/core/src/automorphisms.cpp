#include "bicirc/automorphisms.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "bicirc/graph6.hpp"
#include "bicirc/graph_ops.hpp"
#include "bicirc/group_structure.hpp"
#include "bicirc/stabilizer_chain.hpp"
#include "refinement.hpp"

namespace bicirc {

namespace {

using detail::AdjacencyLists;
using detail::OrderedPartition;

std::vector<std::uint32_t> colors_of(const ColoredGraph& cg) {
  if (cg.colors.empty()) return std::vector<std::uint32_t>(cg.graph.order(), 0);
  if (cg.colors.size() != cg.graph.order()) throw std::invalid_argument("colour count does not match order");
  return cg.colors;
}

// Orbit id (smallest point) of every point under the given generators.
std::vector<std::uint32_t> orbit_ids(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::uint32_t> id(n, UINT32_MAX);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (id[s] != UINT32_MAX) continue;
    id[s] = s;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : gens) {
        const auto y = g[queue[i]];
        if (id[y] == UINT32_MAX) {
          id[y] = s;
          queue.push_back(y);
        }
      }
  }
  return id;
}

// The permutation taking leaf `from` to leaf `to` position by position.
Permutation leaf_map(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
  std::vector<std::uint32_t> images(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) images[from[i]] = to[i];
  return Permutation(images);
}

class AutSearch {
 public:
  AutSearch(const Graph& g, std::vector<std::uint32_t> colors, std::uint64_t budget)
      : g_(g), adj_(detail::adjacency_lists(g)), colors_(std::move(colors)), budget_(budget) {}

  std::vector<Permutation> run() {
    OrderedPartition p(colors_);
    parts_.push_back(p);
    traces_.push_back(parts_.back().refine_all(adj_));
    while (!parts_.back().discrete()) {
      tick();
      OrderedPartition next = parts_.back();
      const auto v = next.lab()[next.target_cell()];
      chosen_.push_back(v);
      traces_.push_back(next.individualize_and_refine(adj_, v));
      parts_.push_back(std::move(next));
    }
    first_leaf_ = parts_.back().lab();

    for (std::size_t level = chosen_.size(); level-- > 0;) {
      const auto& node = parts_[level];
      const auto b = chosen_[level];
      std::vector<std::uint32_t> prefix(chosen_.begin(), chosen_.begin() + static_cast<std::ptrdiff_t>(level));
      auto ids = orbit_ids(g_.order(), gens_);
      for (auto v : node.cell(node.target_cell())) {
        if (v == b || ids[v] == ids[b]) continue;
        prefix.push_back(v);
        if (auto gamma = search(node, v, level + 1, prefix)) {
          gens_.push_back(std::move(*gamma));
          ids = orbit_ids(g_.order(), gens_);
        }
        prefix.pop_back();
      }
    }
    return gens_;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("automorphism search exceeded its node budget");
  }

  bool is_colored_automorphism(const Permutation& p) const {
    for (std::uint32_t v = 0; v < g_.order(); ++v)
      if (colors_[v] != colors_[p[v]]) return false;
    return is_automorphism(g_, p);
  }

  // Looks below (parent, v) for a leaf equivalent to the first leaf.
  std::optional<Permutation> search(const OrderedPartition& parent, std::uint32_t v, std::size_t depth,
                                    std::vector<std::uint32_t>& prefix) {
    tick();
    OrderedPartition p = parent;
    if (p.individualize_and_refine(adj_, v) != traces_[depth]) return std::nullopt;
    if (p.discrete()) {
      if (depth + 1 != parts_.size()) return std::nullopt;
      auto gamma = leaf_map(first_leaf_, p.lab());
      if (is_colored_automorphism(gamma)) return gamma;
      return std::nullopt;
    }
    if (depth + 1 >= parts_.size()) return std::nullopt;
    // Known automorphisms fixing the prefix map failed subtrees to failed subtrees.
    std::vector<Permutation> fixing;
    for (const auto& gen : gens_)
      if (std::all_of(prefix.begin(), prefix.end(), [&](std::uint32_t x) { return gen[x] == x; })) fixing.push_back(gen);
    const auto ids = orbit_ids(g_.order(), fixing);
    std::vector<char> tried(g_.order(), 0);
    for (auto w : p.cell(p.target_cell())) {
      if (tried[ids[w]]) continue;
      tried[ids[w]] = 1;
      prefix.push_back(w);
      auto found = search(p, w, depth + 1, prefix);
      prefix.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  AdjacencyLists adj_;
  std::vector<std::uint32_t> colors_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<OrderedPartition> parts_;
  std::vector<std::uint64_t> traces_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> first_leaf_;
  std::vector<Permutation> gens_;
};

class CanonSearch {
 public:
  CanonSearch(const ColoredGraph& cg, const PermGroup& aut, std::uint64_t budget)
      : g_(cg.graph), adj_(detail::adjacency_lists(cg.graph)), colors_(colors_of(cg)), aut_(aut), budget_(budget) {}

  CanonicalForm run() {
    OrderedPartition p(colors_);
    std::vector<std::uint64_t> traces{p.refine_all(adj_)};
    std::vector<Permutation> gens(aut_.generators().begin(), aut_.generators().end());
    dfs(p, traces, gens);
    std::vector<std::uint32_t> labeling(g_.order());
    for (std::uint32_t i = 0; i < best_lab_.size(); ++i) labeling[best_lab_[i]] = i;
    return {Permutation(labeling), best_cert_};
  }

 private:
  std::string certificate(const std::vector<std::uint32_t>& lab) const {
    std::vector<std::uint32_t> labeling(lab.size());
    for (std::uint32_t i = 0; i < lab.size(); ++i) labeling[lab[i]] = i;
    std::string cert = graph6_encode(relabel(g_, Permutation(labeling)));
    if (std::any_of(colors_.begin(), colors_.end(), [&](std::uint32_t c) { return c != colors_[0]; })) {
      cert += ";";
      for (std::size_t i = 0; i < lab.size(); ++i) cert += (i ? "," : "") + std::to_string(colors_[lab[i]]);
    }
    return cert;
  }

  void dfs(const OrderedPartition& p, std::vector<std::uint64_t>& traces, const std::vector<Permutation>& stab) {
    if (++nodes_ > budget_) throw BudgetExceeded("canonical labelling exceeded its node budget");
    if (have_best_) {
      const auto k = std::min(traces.size(), best_traces_.size());
      if (std::lexicographical_compare(traces.begin(), traces.begin() + static_cast<std::ptrdiff_t>(k),
                                       best_traces_.begin(), best_traces_.begin() + static_cast<std::ptrdiff_t>(k)))
        return;
    }
    if (p.discrete()) {
      auto cert = certificate(p.lab());
      if (!have_best_ || traces > best_traces_ || (traces == best_traces_ && cert > best_cert_)) {
        have_best_ = true;
        best_traces_ = traces;
        best_cert_ = std::move(cert);
        best_lab_ = p.lab();
      }
      return;
    }
    // Children in the same orbit of the prefix stabilizer give identical leaves.
    const auto ids = orbit_ids(g_.order(), stab);
    std::vector<char> tried(g_.order(), 0);
    for (auto w : p.cell(p.target_cell())) {
      if (tried[ids[w]]) continue;
      tried[ids[w]] = 1;
      OrderedPartition child = p;
      traces.push_back(child.individualize_and_refine(adj_, w));
      std::vector<Permutation> child_stab;
      if (!stab.empty()) {
        const std::uint32_t pt[] = {w};
        StabilizerChain chain(g_.order(), stab, pt);
        const auto lg = chain.level_generators(1);
        child_stab.assign(lg.begin(), lg.end());
      }
      dfs(child, traces, child_stab);
      traces.pop_back();
    }
  }

  const Graph& g_;
  AdjacencyLists adj_;
  std::vector<std::uint32_t> colors_;
  const PermGroup& aut_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_traces_;
  std::string best_cert_;
  std::vector<std::uint32_t> best_lab_;
};

}  // namespace

PermGroup automorphism_group(const ColoredGraph& g, const SearchOptions& opts) {
  AutSearch search(g.graph, colors_of(g), opts.node_budget);
  return PermGroup(g.graph.order(), search.run());
}

PermGroup automorphism_group(const Graph& g, const SearchOptions& opts) {
  return automorphism_group(ColoredGraph{g, {}}, opts);
}

CanonicalForm canonical_form(const ColoredGraph& g, const PermGroup& aut, const SearchOptions& opts) {
  if (aut.degree() != g.graph.order()) throw std::invalid_argument("group degree does not match graph order");
  if (g.graph.order() == 0) return {Permutation(0), graph6_encode(g.graph)};
  return CanonSearch(g, aut, opts.node_budget).run();
}

CanonicalForm canonical_form(const ColoredGraph& g, const SearchOptions& opts) {
  return canonical_form(g, automorphism_group(g, opts), opts);
}

CanonicalForm canonical_form(const Graph& g, const SearchOptions& opts) {
  return canonical_form(ColoredGraph{g, {}}, opts);
}

bool are_isomorphic(const Graph& a, const Graph& b, const SearchOptions& opts) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, opts).certificate == canonical_form(b, opts).certificate;
}

bool is_vertex_transitive(const Graph& g, const PermGroup& group) {
  return g.order() <= 1 || group.orbit(0).size() == g.order();
}

bool is_arc_transitive(const Graph& g, const PermGroup& group) {
  if (!is_vertex_transitive(g, group)) return false;
  if (g.order() == 0 || g.degree(0) == 0) return true;
  const auto nbrs = g.neighbors(0);
  return point_stabilizer(group, 0).orbit(nbrs[0]).size() == nbrs.size();
}

bool is_edge_transitive(const Graph& g, const PermGroup& group) {
  const auto edges = g.edges();
  if (edges.size() <= 1) return true;
  std::unordered_map<std::uint64_t, std::size_t> index;
  auto key = [](std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) index[key(edges[i].first, edges[i].second)] = i;
  std::vector<char> seen(edges.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [u, v] = edges[queue[i]];
    for (const auto& gen : group.generators()) {
      const auto j = index.at(key(gen[u], gen[v]));
      if (!seen[j]) {
        seen[j] = 1;
        queue.push_back(j);
      }
    }
  }
  return queue.size() == edges.size();
}

bool is_vertex_transitive(const Graph& g, const SearchOptions& opts) {
  return is_vertex_transitive(g, automorphism_group(g, opts));
}
bool is_arc_transitive(const Graph& g, const SearchOptions& opts) {
  return is_arc_transitive(g, automorphism_group(g, opts));
}
bool is_edge_transitive(const Graph& g, const SearchOptions& opts) {
  return is_edge_transitive(g, automorphism_group(g, opts));
}

std::vector<std::size_t> stabilizer_orbit_profile(const PermGroup& group, std::uint32_t v) {
  auto sizes = point_stabilizer(group, v).orbits().block_sizes();
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> stabilizer_orbit_profile(const Graph& g, std::uint32_t v, const SearchOptions& opts) {
  const auto aut = automorphism_group(g, opts);
  if (!is_vertex_transitive(g, aut)) throw std::invalid_argument("stabilizer_orbit_profile needs a vertex-transitive graph");
  return stabilizer_orbit_profile(aut, v);
}

}  // namespace bicirc
