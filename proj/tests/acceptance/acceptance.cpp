// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "bicirc/automorphisms.hpp"
#include "bicirc/group_structure.hpp"
#include "bicirc/tables.hpp"
#include "corpus.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace bicirc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string failures_of(const SuiteResult& s) {
  std::string out;
  for (const auto& l : s.lines)
    if (!l.pass) out += (out.empty() ? "" : " | ") + l.name + ": " + l.detail;
  return out;
}

Outcome from_suite(const SuiteResult& s) {
  const auto passed = std::count_if(s.lines.begin(), s.lines.end(), [](const CheckLine& l) { return l.pass; });
  std::string detail = std::to_string(passed) + "/" + std::to_string(s.lines.size()) + " rows";
  if (!s.pass()) detail += "; " + failures_of(s);
  return {s.pass(), detail};
}

Outcome lemma_line(const TableOptions& opts) {
  const auto suite = verify_lemmas(opts);
  for (const auto& l : suite.lines)
    if (l.name.rfind("G(2p,r)", 0) == 0) return {l.pass, l.detail};
  return {false, "G(2p,r) line missing from the lemma suite"};
}

Outcome oracle_equivalence() {
  std::size_t graphs = 0, systems = 0;
  std::vector<std::string> bad;
  for (const auto& e : corpus::full()) {
    const auto n = e.graph.order();
    if (n == 0 || n > 8) continue;
    ++graphs;
    const auto aut = automorphism_group(e.graph);
    if (aut.order() != BigInt(oracle::brute_force_automorphisms(e.graph).size())) {
      bad.push_back(e.name + " (order)");
      continue;
    }
    if (n < 2 || !transitivity_profile(aut).transitive) continue;
    ++systems;
    if (minimal_block_systems(aut) != oracle::minimal_block_systems(n, aut.generators()))
      bad.push_back(e.name + " (block systems)");
  }
  std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(systems) + " block system comparisons";
  for (std::size_t i = 0; i < bad.size() && i < 10; ++i) detail += (i ? ", " : "; mismatches: ") + bad[i];
  return {bad.empty() && graphs >= 200, detail};
}

Outcome property_suites() {
  const auto graphs = corpus::full();
  const std::pair<const char*, properties::Report> reports[] = {
      {"complement closure", properties::complement_closure(graphs)},
      {"sdc bicirculant", properties::double_cover_bicirculant(graphs)},
      {"r | valency", properties::r_divides_valency(graphs)},
      {"orbit-stabilizer", properties::orbit_stabilizer(graphs)},
  };
  bool pass = true;
  std::string detail;
  for (const auto& [name, r] : reports) {
    pass = pass && r.violations.empty() && r.checked > 0;
    detail += (detail.empty() ? "" : "; ") + std::string(name) + ": " + r.summary();
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::size_t jobs = 1;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  const TableOptions opts{Limits{}, jobs};

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"cubic table", [&] { return from_suite(verify_cubic_table(opts)); }},
      {"pentavalent table", [&] { return from_suite(verify_pentavalent_table(opts)); }},
      {"G(2p,r) circulant iff r even", [&] { return lemma_line(opts); }},
      {"arc-transitive generalized Petersen graphs", [&] { return from_suite(verify_gp_scan(opts)); }},
      {"cubic census cross-check", [&] { return from_suite(verify_census(opts)); }},
      {"oracle equivalence", [] { return oracle_equivalence(); }},
      {"property suites", [] { return property_suites(); }},
  };

  bool all = true;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << index << ": " << (o.pass ? "PASS" : "FAIL") << " " << name << " (" << secs
              << " s) " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
