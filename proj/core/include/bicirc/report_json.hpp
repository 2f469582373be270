#pragma once

#include <string>

#include "bicirc/graph_ops.hpp"
#include "bicirc/reduce.hpp"
#include "bicirc/tables.hpp"

namespace bicirc {

/// {"is_r_cover": bool, "r": int|null, "witness": [...]}
std::string to_json(const CoverReport& report, int indent = -1);

/// {input, aut_order, partial, scope, candidates: [{N_generators, N_orbits, N_order,
/// maximal, cyclic, r, is_r_cover, quotient, identified}], verdict}.
/// Group orders are decimal strings so they survive any JSON reader.
std::string to_json(const ReductionReport& report, int indent = -1);

/// {title, pass, lines: [{name, pass, detail}]}
std::string to_json(const SuiteResult& suite, int indent = -1);

}  // namespace bicirc
