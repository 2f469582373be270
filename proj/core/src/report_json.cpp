#include "bicirc/report_json.hpp"

#include <json.hpp>

#include "bicirc/graph6.hpp"

namespace bicirc {

namespace {

using nlohmann::ordered_json;

ordered_json cover_json(const CoverReport& c) {
  ordered_json j;
  j["is_r_cover"] = c.is_r_cover;
  j["r"] = c.r ? ordered_json(*c.r) : ordered_json(nullptr);
  j["witness"] = c.witness;
  return j;
}

}  // namespace

std::string to_json(const CoverReport& report, int indent) { return cover_json(report).dump(indent); }

std::string to_json(const ReductionReport& report, int indent) {
  ordered_json j;
  j["input"] = graph6_encode(report.input);
  j["valency"] = report.valency;
  j["aut_order"] = report.aut_order.str();
  j["partial"] = report.partial;
  j["scope"] = report.scope;
  auto cands = ordered_json::array();
  for (const auto& c : report.candidates) {
    ordered_json cj;
    auto gens = ordered_json::array();
    for (const auto& g : c.generators) gens.push_back(g.to_string());
    cj["N_generators"] = gens;
    cj["N_order"] = c.order.str();
    cj["N_orbits"] = c.orbits.blocks();
    cj["maximal"] = c.maximal;
    cj["cyclic"] = c.cyclic ? ordered_json(*c.cyclic) : ordered_json(nullptr);
    cj["r"] = c.cover.r ? ordered_json(*c.cover.r) : ordered_json(nullptr);
    cj["is_r_cover"] = c.cover.is_r_cover;
    cj["quotient"] = graph6_encode(c.quotient);
    cj["identified"] = c.identified ? ordered_json(c.identified->spec.to_string()) : ordered_json(nullptr);
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  j["verdict"] = report.verdict;
  return j.dump(indent);
}

std::string to_json(const SuiteResult& suite, int indent) {
  ordered_json j;
  j["title"] = suite.title;
  j["pass"] = suite.pass();
  auto lines = ordered_json::array();
  for (const auto& l : suite.lines) lines.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
  j["lines"] = std::move(lines);
  return j.dump(indent);
}

}  // namespace bicirc
