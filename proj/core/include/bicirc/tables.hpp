#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicirc/error.hpp"
#include "bicirc/family_spec.hpp"
#include "bicirc/permutation.hpp"

namespace bicirc {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string title;
  std::vector<CheckLine> lines;
  bool pass() const;
};

struct TableOptions {
  Limits limits;
  std::size_t jobs = 1;
};

/// One row of a reduction table: the graph, its automorphism group order
/// when known, and a normal subgroup N whose quotient is the listed graph.
struct TableRow {
  std::string label;
  FamilySpec graph;
  std::optional<BigInt> aut_order;
  /// Set when the listed group is recorded but not asserted.
  std::optional<std::string> aut_note;
  FamilySpec quotient;
  BigInt n_order;
  bool n_cyclic = false;
};

std::vector<TableRow> cubic_table_rows();
std::vector<TableRow> pentavalent_table_rows();

CheckLine check_table_row(const TableRow& row, const TableOptions& opts = {});

SuiteResult verify_cubic_table(const TableOptions& opts = {});
SuiteResult verify_pentavalent_table(const TableOptions& opts = {});
SuiteResult verify_lemmas(const TableOptions& opts = {});
/// Cubic census on at most 24 vertices against the known list, each member
/// reducing to a normal cover.
SuiteResult verify_census(const TableOptions& opts = {});
/// Arc-transitive GP(n,r) with 1 <= r < n/2 and n <= max_n.
std::vector<std::pair<std::uint32_t, std::uint32_t>> arc_transitive_gp(std::uint32_t max_n,
                                                                       const TableOptions& opts = {});
/// arc_transitive_gp(24) against the known list of seven.
SuiteResult verify_gp_scan(const TableOptions& opts = {});

}  // namespace bicirc
