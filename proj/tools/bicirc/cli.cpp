#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "bicirc/automorphisms.hpp"
#include "bicirc/error.hpp"
#include "bicirc/families.hpp"
#include "bicirc/graph6.hpp"
#include "bicirc/predicates.hpp"
#include "bicirc/reduce.hpp"
#include "bicirc/report_json.hpp"
#include "bicirc/tables.hpp"

namespace bicirc::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::uint64_t cap = Limits{}.element_cap;
  std::uint64_t budget = Limits{}.node_budget;
  std::size_t jobs = 1;
  std::string format = "text";

  Limits limits() const { return Limits{cap, budget}; }
  SearchOptions search() const { return SearchOptions{budget, cap}; }
  bool json() const { return format == "json"; }
};

// "g6:" selects raw graph6; anything else is a family spec.
Graph load_input(const std::string& text) {
  if (text.rfind("g6:", 0) == 0) return graph6_decode(std::string_view(text).substr(3));
  return generate(FamilySpec::parse(text)).graph;
}

const std::vector<std::string> kPredicates = {"circulant",      "bicirculant", "arc-transitive",
                                              "vertex-transitive", "aut-order", "rank"};

int cmd_generate(const Config& cfg, const std::string& spec_text, std::ostream& out) {
  const auto spec = FamilySpec::parse(spec_text);
  const auto gen = generate(spec);
  if (!cfg.json()) {
    out << graph6_encode(gen.graph) << '\n';
    return kPass;
  }
  ordered_json j;
  j["spec"] = spec.to_string();
  j["name"] = spec.display_name();
  j["order"] = gen.graph.order();
  j["graph6"] = graph6_encode(gen.graph);
  if (gen.witness) {
    j["witness"] = gen.witness->perm.to_string();
    j["cycle_type"] = gen.witness->type.to_string();
  } else {
    j["witness"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_check(const Config& cfg, const std::string& input, const std::vector<std::string>& preds, std::ostream& out) {
  const auto g = load_input(input);
  const auto search = cfg.search();
  const auto aut = automorphism_group(g, search);
  bool all_true = true;
  ordered_json j;
  j["input"] = graph6_encode(g);
  std::ostringstream text;
  for (const auto& p : preds) {
    if (p == "circulant") {
      const auto r = is_circulant(g, aut, search);
      all_true = all_true && r.witness.has_value();
      j[p] = r.witness.has_value();
      if (r.witness) j["circulant_witness"] = r.witness->to_string();
      text << p << ": " << (r.witness ? "true " + r.witness->to_string() : "false") << '\n';
    } else if (p == "bicirculant") {
      const auto r = g.order() % 2 == 0 ? is_bicirculant(g, aut, search) : std::nullopt;
      all_true = all_true && r.has_value();
      j[p] = r.has_value();
      if (r) j["bicirculant_witness"] = r->perm.to_string();
      text << p << ": " << (r ? "true " + r->perm.to_string() : "false") << '\n';
    } else if (p == "arc-transitive" || p == "vertex-transitive") {
      const bool v = p == "arc-transitive" ? is_arc_transitive(g, aut) : is_vertex_transitive(g, aut);
      all_true = all_true && v;
      j[p] = v;
      text << p << ": " << (v ? "true" : "false") << '\n';
    } else if (p == "aut-order") {
      j[p] = aut.order().str();
      text << p << ": " << aut.order().str() << '\n';
    } else if (p == "rank") {
      if (!is_vertex_transitive(g, aut)) {
        all_true = false;
        j[p] = nullptr;
        text << p << ": undefined (not vertex-transitive)\n";
      } else {
        const auto profile = stabilizer_orbit_profile(aut, 0);
        j[p] = profile.size();
        j["suborbits"] = profile;
        text << p << ": " << profile.size() << '\n';
      }
    }
  }
  out << (cfg.json() ? j.dump(2) + "\n" : text.str());
  return all_true ? kPass : kFail;
}

int cmd_reduce(const Config& cfg, const std::string& input, bool require_bicirculant, std::ostream& out) {
  const auto g = load_input(input);
  ReduceOptions ropts;
  ropts.limits = cfg.limits();
  ropts.require_bicirculant = require_bicirculant;
  const auto report = reduce(g, ropts);
  if (cfg.json()) {
    out << to_json(report, 2) << '\n';
  } else {
    out << "|Aut| = " << report.aut_order.str() << (report.partial ? " (partial candidate list)" : "") << '\n';
    for (const auto& c : report.candidates) {
      out << "N of order " << c.order.str() << (c.cyclic && *c.cyclic ? " cyclic" : "") << ", " << c.orbits.size()
          << " orbits" << (c.maximal ? ", maximal" : "") << ": ";
      if (c.cover.is_r_cover)
        out << "r = " << *c.cover.r;
      else
        out << "not a cover";
      out << ", quotient " << (c.identified ? c.identified->spec.display_name() : graph6_encode(c.quotient)) << '\n';
    }
    out << "verdict: " << (report.verdict ? "pass" : "fail") << " (" << report.scope << ")\n";
  }
  return report.verdict ? kPass : kFail;
}

void print_suite(const SuiteResult& s, std::ostream& out) {
  out << "== " << s.title << '\n';
  std::size_t passed = 0;
  for (const auto& l : s.lines) {
    passed += l.pass;
    out << (l.pass ? "[PASS] " : "[FAIL] ") << l.name << ": " << l.detail << '\n';
  }
  out << passed << "/" << s.lines.size() << " checks passed\n";
}

int cmd_verify_tables(const Config& cfg, const std::string& which, std::ostream& out) {
  TableOptions opts{cfg.limits(), cfg.jobs};
  std::vector<SuiteResult> suites;
  auto want = [&](const char* name) { return which == name || which == "all"; };
  if (want("1")) suites.push_back(verify_cubic_table(opts));
  if (want("2")) suites.push_back(verify_pentavalent_table(opts));
  if (want("lemmas")) suites.push_back(verify_lemmas(opts));
  if (want("gp")) suites.push_back(verify_gp_scan(opts));
  if (want("census")) suites.push_back(verify_census(opts));
  const bool pass = std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
  if (cfg.json()) {
    auto arr = ordered_json::array();
    for (const auto& s : suites) arr.push_back(ordered_json::parse(to_json(s)));
    out << (suites.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  } else {
    for (const auto& s : suites) print_suite(s, out);
  }
  return pass ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant and bicirculant graph toolkit"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--cap", cfg.cap, "element enumeration cap")->envname("BICIRC_CAP")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "search node budget")->envname("BICIRC_BUDGET")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads")->envname("BICIRC_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "text or json")
      ->envname("BICIRC_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));

  std::string spec, input, which;
  std::vector<std::string> preds;
  bool no_bicirculant_check = false;

  auto* gen = app.add_subcommand("generate", "print graph6 for a family spec");
  gen->add_option("spec", spec, "family spec, e.g. GP(5,2)")->required();
  auto* check = app.add_subcommand("check", "evaluate predicates");
  check->add_option("input", input, "family spec or g6:<graph6>")->required();
  check->add_option("predicates", preds, "circulant, bicirculant, arc-transitive, vertex-transitive, aut-order, rank")
      ->required()
      ->check(CLI::IsMember(kPredicates));
  auto* red = app.add_subcommand("reduce", "normal quotient reduction report");
  red->add_option("input", input, "family spec or g6:<graph6>")->required();
  red->add_flag("--any-graph", no_bicirculant_check, "skip the bicirculant precondition");
  auto* ver = app.add_subcommand("verify-tables", "run a verification suite");
  ver->add_option("which", which, "1, 2, lemmas, gp, census or all")
      ->required()
      ->check(CLI::IsMember({"1", "2", "lemmas", "gp", "census", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) return cmd_generate(cfg, spec, out);
    if (*check) return cmd_check(cfg, input, preds, out);
    if (*red) return cmd_reduce(cfg, input, !no_bicirculant_check, out);
    if (*ver) return cmd_verify_tables(cfg, which, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const OrderCapExceeded& e) {
    err << "element cap exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bicirc::cli
