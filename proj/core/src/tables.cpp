#include "bicirc/tables.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "bicirc/automorphisms.hpp"
#include "bicirc/census.hpp"
#include "bicirc/families.hpp"
#include "bicirc/graph_ops.hpp"
#include "bicirc/predicates.hpp"
#include "bicirc/reduce.hpp"
#include "parallel.hpp"

namespace bicirc {

namespace {

std::string to_str(const BigInt& x) { return x.str(); }

SearchOptions search_of(const TableOptions& opts) { return SearchOptions{opts.limits.node_budget, opts.limits.element_cap}; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// Samples of the dihedral family Cay(D_2n, {b, ba, ..}) of valency k, and the
// prime p used for the quotient G(2p,k) by N = <a^p>.
struct DihedralSample {
  std::uint32_t n, r, p;
};

CheckLine check_dihedral_row(std::uint32_t k, const std::vector<DihedralSample>& samples,
                             const std::vector<std::uint32_t>& infeasible, const TableOptions& opts,
                             bool assert_aut_6n) {
  CheckLine line;
  line.name = "Cay(D_2n, valency " + std::to_string(k) + ") -> G(2p," + std::to_string(k) + ")";
  line.pass = true;
  std::vector<std::string> notes;
  for (const auto& s : samples) {
    TableRow row;
    row.label = "n=" + std::to_string(s.n);
    row.graph = fam::GammaNK{s.n, k, s.r};
    if (assert_aut_6n) row.aut_order = BigInt(6) * s.n;
    row.quotient = fam::G2p{s.p, k};
    row.n_order = s.n / s.p;
    row.n_cyclic = true;
    auto sub = check_table_row(row, opts);
    line.pass = line.pass && sub.pass;
    notes.push_back("n=" + std::to_string(s.n) + " r=" + std::to_string(s.r) + " p=" + std::to_string(s.p) + ": " +
                    (sub.pass ? "ok" : "FAIL") + " (" + sub.detail + ")");
  }
  for (auto n : infeasible) {
    const bool none = gamma_parameters(n, k).empty();
    line.pass = line.pass && none;
    notes.push_back("n=" + std::to_string(n) + ": " + (none ? "no admissible r exists" : "unexpected admissible r"));
  }
  line.detail = join(notes, "; ");
  return line;
}

struct Expectation {
  std::string name;
  FamilySpec spec;
  bool expected;
};

// Runs `predicate` over the expectations; one line, listing any mismatches.
CheckLine expectation_line(const std::string& name, const std::vector<Expectation>& cases,
                           const std::function<bool(const Graph&)>& predicate) {
  CheckLine line{name, true, ""};
  std::vector<std::string> bad;
  for (const auto& c : cases) {
    const auto g = generate(c.spec).graph;
    if (predicate(g) != c.expected) bad.push_back(c.name);
  }
  line.pass = bad.empty();
  line.detail = std::to_string(cases.size()) + " graphs checked" + (bad.empty() ? "" : "; mismatches: " + join(bad, ", "));
  return line;
}

std::vector<FamilySpec> circulant_corpus() {
  std::vector<FamilySpec> out;
  for (std::uint32_t n = 4; n <= 10; ++n) {
    std::vector<std::vector<std::uint32_t>> pairs;
    for (std::uint32_t x = 1; 2 * x <= n; ++x) pairs.push_back(2 * x == n ? std::vector<std::uint32_t>{x} : std::vector<std::uint32_t>{x, n - x});
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::uint32_t> s;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) s.insert(s.end(), pairs[i].begin(), pairs[i].end());
      if (s.size() > 4) continue;
      std::sort(s.begin(), s.end());
      out.push_back(fam::CayCyclic{n, s});
    }
  }
  return out;
}

std::vector<FamilySpec> non_circulant_corpus() {
  return {fam::Petersen{}, fam::Hamming{2, 4}, fam::Clebsch{}, fam::KnnMinusMatching{4},
          fam::GenPetersen{8, 3}, fam::BPG{3, 2, false}, fam::GenPetersen{6, 1}, fam::GenPetersen{10, 2}};
}

std::vector<Expectation> basic_instances(bool circulant_expectation) {
  std::vector<Expectation> out;
  auto add = [&](FamilySpec spec, bool circulant) {
    const auto g = generate(spec).graph;
    const bool expected = circulant_expectation ? circulant : g.order() % 2 == 0;
    out.push_back({spec.display_name(), std::move(spec), expected});
  };
  for (std::uint32_t n = 2; n <= 5; ++n) add(fam::CompleteMultipartite{2, n}, true);
  for (std::uint32_t n = 3; n <= 7; ++n) add(fam::CompleteMultipartite{n, 1}, true);
  for (std::uint32_t n = 3; n <= 5; ++n) add(fam::CompleteMultipartite{n, 2}, true);
  for (std::uint32_t n = 3; n <= 6; ++n) add(fam::KnnMinusMatching{n}, n % 2 == 1);
  for (std::uint32_t p : {5u, 7u})
    for (std::uint32_t r = 2; r < p; ++r)
      if ((p - 1) % r == 0) add(fam::G2p{p, r}, r % 2 == 0);
  for (std::uint32_t p : {5u, 7u, 11u, 13u})
    for (std::uint32_t e = 2; e < p; e += 2)
      if ((p - 1) % e == 0) add(fam::CayPE{p, e}, true);
  add(fam::BPG{3, 2, false}, false);
  add(fam::BPG{3, 2, true}, false);
  add(fam::BPG{3, 3, false}, false);
  add(fam::BPG{3, 3, true}, false);
  add(fam::BH11prime{}, false);
  for (FamilySpec s : {FamilySpec(fam::Petersen{}), FamilySpec(fam::Hamming{2, 4}), FamilySpec(fam::Clebsch{})}) {
    add(s, false);
    add(complement_of(s), false);
  }
  return out;
}

std::vector<CheckLine> check_rows(const std::vector<TableRow>& rows, const TableOptions& opts) {
  std::vector<CheckLine> lines(rows.size());
  detail::parallel_for(rows.size(), opts.jobs, [&](std::size_t i) { lines[i] = check_table_row(rows[i], opts); });
  return lines;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

std::vector<TableRow> cubic_table_rows() {
  const FamilySpec k44 = fam::KnnMinusMatching{4};
  return {
      {"K_4", fam::CompleteMultipartite{4, 1}, BigInt(24), std::nullopt, fam::CompleteMultipartite{4, 1}, 1, false},
      {"K_{3,3}", fam::CompleteMultipartite{2, 3}, BigInt(72), std::nullopt, fam::CompleteMultipartite{2, 3}, 1, false},
      {"K_{4,4}-4K_2", k44, BigInt(48), std::nullopt, k44, 1, false},
      {"Heawood", fam::BPG{3, 2, false}, std::nullopt,
       "listed group PGL(3,2) has order 168, which is the index-2 subgroup preserving the halves",
       fam::BPG{3, 2, false}, 1, false},
      {"GP(5,2)", fam::GenPetersen{5, 2}, BigInt(120), std::nullopt, fam::Petersen{}, 1, false},
      {"GP(8,3)", fam::GenPetersen{8, 3}, BigInt(96), std::nullopt, k44, 2, false},
      {"GP(10,2)", fam::GenPetersen{10, 2}, BigInt(120), std::nullopt, fam::Petersen{}, 2, false},
      {"GP(10,3)", fam::GenPetersen{10, 3}, BigInt(240), std::nullopt, fam::Petersen{}, 2, false},
      {"GP(12,5)", fam::GenPetersen{12, 5}, BigInt(144), std::nullopt, k44, 3, true},
      {"GP(24,5)", fam::GenPetersen{24, 5}, BigInt(288), std::nullopt, k44, 6, true},
  };
}

std::vector<TableRow> pentavalent_table_rows() {
  const FamilySpec k66 = fam::KnnMinusMatching{6};
  return {
      {"K_6", fam::CompleteMultipartite{6, 1}, BigInt(720), std::nullopt, fam::CompleteMultipartite{6, 1}, 1, false},
      {"K_{6,6}-6K_2", k66, BigInt(1440), std::nullopt, k66, 1, false},
      {"B(PG(2,4))", fam::BPG{3, 4, false}, BigInt(241920),
       "listed as PGammaL(3,2):S_2; the asserted order is 2|PGammaL(3,4)|", fam::BPG{3, 4, false}, 1, false},
      {"Clebsch", fam::Clebsch{}, BigInt(1920), std::nullopt, fam::Clebsch{}, 1, false},
      {"BC_6[{1,5},{0,1,5},{2,4}]", fam::BC{6, {1, 5}, {0, 1, 5}, {2, 4}}, BigInt(120), std::nullopt,
       fam::CompleteMultipartite{6, 1}, 2, false},
      {"BC_12[{},{0,1,2,4,9},{}]", fam::BC{12, {}, {0, 1, 2, 4, 9}, {}}, BigInt(480), std::nullopt, k66, 2, true},
      {"BC_24[{},{0,1,3,11,20},{}]", fam::BC{24, {}, {0, 1, 3, 11, 20}, {}}, BigInt(960), std::nullopt, k66, 4, true},
  };
}

CheckLine check_table_row(const TableRow& row, const TableOptions& opts) {
  const auto search = search_of(opts);
  CheckLine line;
  line.name = row.label;
  const auto g = generate(row.graph).graph;
  const auto aut = automorphism_group(g, search);
  const auto order = aut.order();
  const bool aut_ok = !row.aut_order || order == *row.aut_order;

  ReduceOptions ropts;
  ropts.limits = opts.limits;
  const auto report = reduce(g, aut, ropts);
  const auto target = canonical_form(generate(row.quotient).graph, search).certificate;
  const auto* cand = report.find_candidate(row.n_order, target, row.n_cyclic);

  std::ostringstream detail;
  detail << "|Aut|=" << to_str(order);
  if (row.aut_order) detail << (aut_ok ? " (matches)" : " (expected " + to_str(*row.aut_order) + ")");
  if (row.aut_note) detail << " [flag: " << *row.aut_note << "]";
  detail << "; N of order " << to_str(row.n_order) << (row.n_cyclic ? " (cyclic)" : "") << " with quotient "
         << row.quotient.display_name() << ": ";
  if (cand)
    detail << "found, r=" << (cand->cover.r ? std::to_string(*cand->cover.r) : "-") << (cand->maximal ? ", maximal" : ", not maximal");
  else
    detail << "not found";
  detail << "; verdict " << (report.verdict ? "pass" : "fail");
  line.pass = aut_ok && cand != nullptr && report.verdict;
  line.detail = detail.str();
  return line;
}

SuiteResult verify_cubic_table(const TableOptions& opts) {
  SuiteResult result{"cubic arc-transitive bicirculants", {}};
  result.lines = check_rows(cubic_table_rows(), opts);
  result.lines.push_back(check_dihedral_row(3, {{13, 3, 13}, {19, 7, 19}, {21, 4, 7}}, {}, opts, true));
  return result;
}

SuiteResult verify_pentavalent_table(const TableOptions& opts) {
  SuiteResult result{"pentavalent arc-transitive bicirculants", {}};
  result.lines = check_rows(pentavalent_table_rows(), opts);
  result.lines.push_back(check_dihedral_row(5, {{11, 3, 11}, {55, 36, 11}}, {25}, opts, false));
  return result;
}

SuiteResult verify_lemmas(const TableOptions& opts) {
  const auto search = search_of(opts);
  SuiteResult result{"basic lemmas", {}};
  auto circulant = [&](const Graph& g) {
    return is_circulant(g, automorphism_group(g, search), search).witness.has_value();
  };
  auto bicirculant = [&](const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return is_bicirculant(g, automorphism_group(g, search), search).has_value();
  };

  {
    CheckLine line{"circulants of even order are bicirculants", true, ""};
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (const auto& s : circulant_corpus()) {
      const auto g = generate(s).graph;
      if (g.order() % 2 != 0) continue;
      ++checked;
      if (!bicirculant(g)) bad.push_back(s.to_string());
    }
    line.pass = bad.empty();
    line.detail = std::to_string(checked) + " graphs checked" + (bad.empty() ? "" : "; failures: " + join(bad, ", "));
    result.lines.push_back(line);
  }

  std::vector<FamilySpec> corpus = circulant_corpus();
  for (auto& s : non_circulant_corpus()) corpus.push_back(s);
  {
    CheckLine line{"circulant iff the complement is", true, ""};
    CheckLine line2{"bicirculant iff the complement is", true, ""};
    std::vector<std::string> bad, bad2;
    std::size_t even = 0;
    for (const auto& s : corpus) {
      const auto g = generate(s).graph;
      const auto c = complement(g);
      if (circulant(g) != circulant(c)) bad.push_back(s.to_string());
      if (g.order() % 2 == 0) {
        ++even;
        if (bicirculant(g) != bicirculant(c)) bad2.push_back(s.to_string());
      }
    }
    line.pass = bad.empty();
    line.detail = std::to_string(corpus.size()) + " graphs checked" + (bad.empty() ? "" : "; failures: " + join(bad, ", "));
    line2.pass = bad2.empty();
    line2.detail = std::to_string(even) + " graphs checked" + (bad2.empty() ? "" : "; failures: " + join(bad2, ", "));
    result.lines.push_back(line);
    result.lines.push_back(line2);
  }

  {
    CheckLine line{"G(2p,r) is a circulant iff r is even, and always a bicirculant", true, ""};
    std::vector<std::string> notes;
    for (std::uint32_t p : {5u, 7u, 11u, 13u})
      for (std::uint32_t r = 2; r < p; ++r) {
        if ((p - 1) % r != 0) continue;
        const auto g = gen_g2p(p, r).graph;
        const bool circ = circulant(g);
        const bool bic = bicirculant(g);
        const bool ok = circ == (r % 2 == 0) && bic;
        line.pass = line.pass && ok;
        notes.push_back("G(" + std::to_string(2 * p) + "," + std::to_string(r) + "): circulant=" + (circ ? "yes" : "no") +
                        " bicirculant=" + (bic ? "yes" : "no") + (ok ? "" : " MISMATCH"));
      }
    line.detail = join(notes, "; ");
    result.lines.push_back(line);
  }

  result.lines.push_back(expectation_line("basic graphs that are circulants", basic_instances(true), circulant));
  result.lines.push_back(
      expectation_line("basic graphs that are bicirculants (all but odd orders)", basic_instances(false), bicirculant));

  {
    CheckLine line{"double cover of a circulant is a bicirculant covering it", true, ""};
    std::vector<std::string> bad;
    std::size_t checked = 0;
    for (const auto& s : circulant_corpus()) {
      const auto g = generate(s).graph;
      if (!is_connected(g) || bipartition(g)) continue;
      ++checked;
      const auto cover = standard_double_cover(g);
      const auto n = static_cast<std::uint32_t>(g.order());
      std::vector<std::vector<std::uint32_t>> pairs;
      for (std::uint32_t x = 0; x < n; ++x) pairs.push_back({x, n + x});
      const auto q = quotient_graph(cover, Partition::from_blocks(2 * n, pairs));
      const bool ok = bicirculant(cover) && is_connected(cover) && q.quotient == g && q.cover.is_r_cover && q.cover.r == 1u;
      if (!ok) bad.push_back(s.to_string());
    }
    line.pass = bad.empty();
    line.detail = std::to_string(checked) + " connected non-bipartite circulants checked" +
                  (bad.empty() ? "" : "; failures: " + join(bad, ", "));
    result.lines.push_back(line);
  }
  return result;
}

SuiteResult verify_census(const TableOptions& opts) {
  const auto search = search_of(opts);
  SuiteResult result{"cubic bicirculant census up to 24 vertices", {}};
  CensusOptions copts;
  copts.min_valency = 3;
  copts.jobs = opts.jobs;
  copts.search = search;
  const auto found = census(12, 3, copts);

  const std::vector<FamilySpec> known = {
      fam::CompleteMultipartite{4, 1}, fam::CompleteMultipartite{2, 3}, fam::GenPetersen{4, 1},
      fam::GenPetersen{5, 2},          fam::BPG{3, 2, false},           fam::GenPetersen{8, 3},
      fam::GenPetersen{10, 2},         fam::GenPetersen{10, 3},         fam::GenPetersen{12, 5}};
  std::set<std::string> expected, got;
  std::vector<std::string> missing, extra;
  for (const auto& s : known) expected.insert(canonical_form(generate(s).graph, search).certificate);
  for (const auto& e : found) got.insert(e.certificate);
  for (const auto& s : known)
    if (!got.count(canonical_form(generate(s).graph, search).certificate)) missing.push_back(s.display_name());
  for (const auto& e : found)
    if (!expected.count(e.certificate)) extra.push_back(e.frame.n ? FamilySpec(e.frame).to_string() : "?");

  CheckLine match{"census equals the known list", missing.empty() && extra.empty(), ""};
  match.detail = std::to_string(found.size()) + " graphs found, " + std::to_string(known.size()) + " expected" +
                 (missing.empty() ? "" : "; missing: " + join(missing, ", ")) +
                 (extra.empty() ? "" : "; unexpected: " + join(extra, ", "));
  result.lines.push_back(match);

  CheckLine covers{"each census graph is a normal cover of a basic graph", true, ""};
  std::vector<std::string> notes;
  ReduceOptions ropts;
  ropts.limits = opts.limits;
  for (const auto& e : found) {
    const auto report = reduce(e.graph, ropts);
    bool ok = report.verdict;
    std::string quotients;
    for (const auto& c : report.candidates) {
      if (!c.maximal) continue;
      ok = ok && c.cover.r == 1u;
      quotients += (quotients.empty() ? "" : "/") + (c.identified ? c.identified->spec.display_name() : std::string("?"));
    }
    covers.pass = covers.pass && ok;
    notes.push_back(FamilySpec(e.frame).to_string() + " -> " + quotients + (ok ? "" : " FAIL"));
  }
  covers.detail = join(notes, "; ");
  result.lines.push_back(covers);
  return result;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> arc_transitive_gp(std::uint32_t max_n, const TableOptions& opts) {
  const auto search = search_of(opts);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t n = 3; n <= max_n; ++n)
    for (std::uint32_t r = 1; 2 * r < n; ++r)
      if (is_arc_transitive(gen_gp(n, r).graph, search)) out.emplace_back(n, r);
  return out;
}

SuiteResult verify_gp_scan(const TableOptions& opts) {
  SuiteResult result{"arc-transitive generalized Petersen graphs up to n = 24", {}};
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> known = {{4, 1}, {5, 2}, {8, 3}, {10, 2},
                                                                      {10, 3}, {12, 5}, {24, 5}};
  const auto found = arc_transitive_gp(24, opts);
  std::vector<std::string> names;
  for (const auto& [n, r] : found) names.push_back("GP(" + std::to_string(n) + "," + std::to_string(r) + ")");
  result.lines.push_back({"scan matches the known list", found == known, "found: " + join(names, ", ")});
  return result;
}

}  // namespace bicirc
