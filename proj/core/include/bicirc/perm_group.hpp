#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bicirc/partition.hpp"
#include "bicirc/permutation.hpp"
#include "bicirc/stabilizer_chain.hpp"

namespace bicirc {

/// A permutation group given by generators. The stabilizer chain is built on
/// first demand and shared between copies; the group itself is immutable.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  /// Throws std::invalid_argument if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(std::size_t degree);
  static PermGroup cyclic(const Permutation& generator);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const;

  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }
  /// Every generator of `sub` is a member.
  bool contains_group(const PermGroup& sub) const;

  std::vector<std::uint32_t> orbit(std::uint32_t point) const;
  Partition orbits() const;
  std::size_t orbit_count() const { return orbits().size(); }

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Orbits of the group generated by `generators` on {0..degree-1}.
Partition orbits_of(std::size_t degree, std::span<const Permutation> generators);

}  // namespace bicirc
