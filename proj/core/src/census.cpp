#include "bicirc/census.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "bicirc/families.hpp"
#include "bicirc/graph_ops.hpp"
#include "parallel.hpp"
#include "refinement.hpp"

namespace bicirc {

namespace {

using Set = std::vector<std::uint32_t>;
using Frame = std::tuple<Set, Set, Set>;

// Symmetric subsets of Z_n \ {0} with exactly `size` elements.
void symmetric_subsets(std::uint32_t n, std::size_t size, std::vector<Set>& out) {
  std::vector<Set> pairs;
  for (std::uint32_t x = 1; 2 * x <= n; ++x) pairs.push_back(2 * x == n ? Set{x} : Set{x, n - x});
  Set current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (current.size() == size) {
      Set s = current;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    if (i == pairs.size()) return;
    if (current.size() + pairs[i].size() <= size) {
      current.insert(current.end(), pairs[i].begin(), pairs[i].end());
      self(self, i + 1);
      current.resize(current.size() - pairs[i].size());
    }
    self(self, i + 1);
  };
  rec(rec, 0);
}

// Subsets of Z_n containing 0 with exactly `size` elements.
void subsets_with_zero(std::uint32_t n, std::size_t size, std::vector<Set>& out) {
  Set current{0};
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t x = next; x < n; ++x) {
      if (current.size() + (n - x) < size) break;
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
}

Set scaled(const Set& s, std::uint32_t u, std::uint32_t n, std::uint32_t shift = 0) {
  Set out;
  out.reserve(s.size());
  for (auto x : s) out.push_back(static_cast<std::uint32_t>((std::uint64_t{x} * u + n - shift) % n));
  std::sort(out.begin(), out.end());
  return out;
}

// True iff the frame is the least among its images under the frame symmetries.
bool is_canonical_frame(const Frame& f, std::uint32_t n) {
  const auto& [l, m, r] = f;
  for (std::uint32_t u = 1; u < n || u == 1; ++u) {
    if (n > 1 && std::gcd(u, n) != 1) continue;
    for (int swap = 0; swap < 2; ++swap) {
      const auto nl = scaled(swap ? r : l, u, n);
      const auto nr = scaled(swap ? l : r, u, n);
      const auto um = scaled(m, swap ? (n - u) % n : u, n);
      for (auto c : um) {
        Frame image{nl, scaled(um, 1, n, c), nr};
        if (image < f) return false;
      }
    }
    if (n == 1) break;
  }
  return true;
}

// Cheap necessary conditions for arc-transitivity: individualizing any
// vertex gives the same refinement trace, and leaves its neighbours in one cell.
bool passes_prefilter(const Graph& g) {
  if (!is_connected(g)) return false;
  const auto adj = detail::adjacency_lists(g);
  detail::OrderedPartition root(std::vector<std::uint32_t>(g.order(), 0));
  root.refine_all(adj);
  std::optional<std::uint64_t> trace;
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    auto p = root;
    const auto t = p.individualize_and_refine(adj, v);
    if (trace && *trace != t) return false;
    trace = t;
    const auto& nb = adj[v];
    for (auto w : nb)
      if (p.cell_start_of(w) != p.cell_start_of(nb[0])) return false;
  }
  return true;
}

std::optional<CensusEntry> examine(const fam::BC& frame, const SearchOptions& search) {
  auto graph = gen_bc(frame.n, frame.l, frame.m, frame.r).graph;
  if (!passes_prefilter(graph)) return std::nullopt;
  const auto aut = automorphism_group(graph, search);
  if (!is_arc_transitive(graph, aut)) return std::nullopt;
  CensusEntry e;
  e.frame = frame;
  e.certificate = canonical_form(ColoredGraph{graph, {}}, aut, search).certificate;
  e.aut_order = aut.order();
  e.valency = graph.degree(0);
  e.graph = std::move(graph);
  return e;
}

}  // namespace

std::vector<fam::BC> census_frames(std::uint32_t n, std::size_t valency) {
  std::vector<fam::BC> frames;
  for (std::size_t t = 1; t <= std::min<std::size_t>(valency, n); ++t) {
    std::vector<Set> sides, spokes;
    symmetric_subsets(n, valency - t, sides);
    subsets_with_zero(n, t, spokes);
    for (const auto& m : spokes)
      for (const auto& l : sides)
        for (const auto& r : sides) {
          Frame f{l, m, r};
          if (is_canonical_frame(f, n)) frames.push_back(fam::BC{n, l, m, r});
        }
  }
  return frames;
}

std::vector<CensusEntry> census(std::size_t max_n, std::size_t max_valency, const CensusOptions& opts) {
  std::vector<fam::BC> frames;
  for (std::uint32_t n = 1; n <= max_n; ++n)
    for (std::size_t k = std::max<std::size_t>(opts.min_valency, 1); k <= max_valency; ++k) {
      auto f = census_frames(n, k);
      frames.insert(frames.end(), f.begin(), f.end());
    }

  std::vector<std::optional<CensusEntry>> results(frames.size());
  detail::parallel_for(frames.size(), opts.jobs, [&](std::size_t i) { results[i] = examine(frames[i], opts.search); });

  std::vector<CensusEntry> out;
  for (auto& r : results) {
    if (!r) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const CensusEntry& e) { return e.certificate == r->certificate; });
    if (!seen) out.push_back(std::move(*r));
  }
  std::stable_sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
    if (a.valency != b.valency) return a.valency < b.valency;
    return a.certificate < b.certificate;
  });
  return out;
}

}  // namespace bicirc
