#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bicirc {

/// Element enumeration would exceed the configured cap.
class OrderCapExceeded : public std::runtime_error {
 public:
  explicit OrderCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A backtracking search ran out of its node budget before completing.
/// Distinct from a search that finished and found nothing.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Resource limits shared by the group and search routines.
struct Limits {
  std::uint64_t element_cap = 1'000'000;
  std::uint64_t node_budget = 100'000'000;
};

}  // namespace bicirc
